#include "cdyn/csv_report.hpp"

#include <cstdio>
#include <ostream>

namespace cdyn {

std::string csv_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

std::string group_label(const FiniteAbelianGroup& g) {
  std::string s;
  for (std::size_t j = 0; j < g.rank(); ++j) s += (j ? " x Z_" : "Z_") + std::to_string(g.factors()[j]);
  return s;
}

void dichotomy_header(std::ostream& os, const labs::DichotomyTable& t) {
  os << "# window N=" << t.N << ", interior radius " << t.radius << ", z grid " << t.zgrid << ", x/y grid "
     << t.xygrid << ", circle samples " << t.samples << "\n";
  os << "# sup_phi=" << csv_number(t.sup_phi) << ", sup_psi=" << csv_number(t.sup_psi)
     << ", eps_N=" << csv_number(t.eps) << "\n";
}

void dichotomy_row(std::ostream& os, const labs::DichotomyRow& r, double eps) {
  os << r.k << "," << csv_number(r.z.real()) << "," << csv_number(r.z.imag()) << "," << csv_number(r.d_tilde) << ","
     << csv_number(r.omega) << "," << csv_number(r.bound_rhs) << "," << csv_number(eps) << ","
     << (r.pass ? "pass" : "fail") << "\n";
}

}  // namespace

void write_rc_csv(std::ostream& os, const DynSystem& sys, const RcTable& t, const std::string& p_name,
                  const std::string& q_name) {
  const auto& g = sys.group();
  os << "# relative continuity modulus of (p, q) = (" << p_name << ", " << q_name << ")\n";
  os << "# d(z) = max_{x,y} ||F(p,xz)F(q,y) - F(p,x)F(q,zy)||\n";
  os << "# c1(z) = ||F(p,z)F(q,e) - F(p,e)F(q,z)||, c2(z) = ||F(p,z)F(q,z^-1) - F(p,e)F(q,e)||\n";
  os << "# group " << group_label(g) << ", dim " << sys.dim() << "\n";
  os << "z_index";
  for (std::size_t j = 0; j < g.rank(); ++j) os << ",z_" << j;
  os << ",d,c1,c2\n";
  for (std::size_t x = 0; x < sys.order(); ++x) {
    os << x;
    for (int r : g.dual_element(x).residues) os << "," << r;
    os << "," << csv_number(t.d[x]) << "," << csv_number(t.c1[x]) << "," << csv_number(t.c2[x]) << "\n";
  }
}

void write_dichotomy_csv(std::ostream& os, const labs::DichotomyTable& t, const std::string& phi_name,
                         const std::string& psi_name) {
  os << "# rank-one dichotomy for (phi, psi) = (" << phi_name << ", " << psi_name << ")\n";
  os << "# d_tilde(z) = max_{x,y} ||F(P,xz)F(Q,y) - F(P,x)F(Q,zy)|| on the interior block\n";
  os << "# omega(z) = sup_w |h(zw) - h(w)|, h = conj(phi) psi; bound_rhs = sup_phi sup_psi omega + eps_N\n";
  dichotomy_header(os, t);
  os << "k,z_re,z_im,d_tilde,omega,bound_rhs,eps_N,pass\n";
  for (const auto& r : t.rows) dichotomy_row(os, r, t.eps);
}

void write_shift_sum_csv(std::ostream& os, const std::string& phi_name,
                         const std::vector<labs::ShiftSumReport>& rows, int bandwidth) {
  os << "# windowed shift sum of P_phi against the Laurent matrix of |phi|^2, phi = " << phi_name << "\n";
  os << "# bandwidth " << bandwidth << "; interior_residual = max entry gap over |i|,|j| <= K - bandwidth\n";
  os << "N,K,interior_residual\n";
  for (const auto& r : rows) os << r.N << "," << r.K << "," << csv_number(r.residual) << "\n";
}

void write_fourier_shift_csv(std::ostream& os, const std::string& phi_name, int N, int bandwidth,
                             const std::vector<labs::FourierShiftReport>& rows) {
  os << "# windowed F(P_phi, z) against M_phi W_z M_phi*, phi = " << phi_name << "\n";
  os << "# window N=" << N << ", bandwidth " << bandwidth << ", K = N - bandwidth\n";
  os << "z_re,z_im,K,interior_radius,interior_residual\n";
  for (const auto& r : rows)
    os << csv_number(r.z.real()) << "," << csv_number(r.z.imag()) << "," << r.K << "," << r.radius << ","
       << csv_number(r.residual) << "\n";
}

void write_cube_csv(std::ostream& os, const std::string& phi_name, const std::string& psi_name, int N,
                    const std::vector<labs::CubeReport>& rows) {
  os << "# cube bound omega(z)^3 <= sup_phi sup_psi (t1 + t2 + t3 + t4), (phi, psi) = (" << phi_name << ", "
     << psi_name << ")\n";
  os << "# window N=" << N << "\n";
  os << "z_re,z_im,omega,lhs,t1,t2,t3,t4,rhs,slack,eps_N,holds\n";
  for (const auto& r : rows) {
    os << csv_number(r.z.real()) << "," << csv_number(r.z.imag()) << "," << csv_number(r.omega) << ","
       << csv_number(r.lhs);
    for (double t : r.terms) os << "," << csv_number(t);
    os << "," << csv_number(r.rhs) << "," << csv_number(r.slack) << "," << csv_number(r.eps) << ","
       << (r.holds() ? "pass" : "fail") << "\n";
  }
}

void write_twist_csv(std::ostream& os, const labs::TwistReport& r, const std::string& delta_name,
                     const std::string& phi_name, const std::string& psi_name) {
  os << "# twist by conjugation with M_delta, delta = " << delta_name << ", (phi, psi) = (" << phi_name << ", "
     << psi_name << ")\n";
  os << "# tables: plain (P, Q), twisted (Delta P, Delta Q), mixed (P, Delta Q)\n";
  os << "# commutation with the shift action: " << csv_number(r.commute_residual) << "\n";
  dichotomy_header(os, r.plain);
  os << "table,k,z_re,z_im,d_tilde,omega,bound_rhs,eps_N,pass\n";
  const std::pair<const char*, const labs::DichotomyTable*> tables[] = {
      {"plain", &r.plain}, {"twisted", &r.twisted}, {"mixed", &r.mixed}};
  for (const auto& [name, t] : tables)
    for (const auto& row : t->rows) {
      os << name << ",";
      dichotomy_row(os, row, t->eps);
    }
}

void write_positive_csv(std::ostream& os, const std::vector<double>& lambdas,
                        const std::vector<std::string>& names, int N, const labs::PositiveReport& r) {
  os << "# T = sum lambda_n P_n against sup_w sum lambda_n |phi_n(w)|^2, window N=" << N << "\n";
  os << "# family:";
  for (std::size_t i = 0; i < names.size(); ++i) os << " " << csv_number(lambdas[i]) << "*" << names[i];
  os << "\n";
  os << "sup_symbol,strict_sum_sup,section_norm,laurent_residual,eps_N,agree\n";
  os << csv_number(r.sup_symbol) << "," << csv_number(r.strict_sum_sup) << "," << csv_number(r.section_norm) << ","
     << csv_number(r.laurent_residual) << "," << csv_number(r.eps) << "," << (r.agree ? "pass" : "fail") << "\n";
}

}  // namespace cdyn
