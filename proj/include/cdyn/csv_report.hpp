#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cdyn/labs.hpp"
#include "cdyn/rc_diagnostics.hpp"

namespace cdyn {

// CSV writers shared by the CLI and its tests. Every table starts with
// "# " header lines naming the quantity and all parameters; numbers are
// printed with 15 significant digits, complex values as two columns.

std::string csv_number(double v);

void write_rc_csv(std::ostream& os, const DynSystem& sys, const RcTable& t, const std::string& p_name,
                  const std::string& q_name);

void write_dichotomy_csv(std::ostream& os, const labs::DichotomyTable& t, const std::string& phi_name,
                         const std::string& psi_name);

void write_shift_sum_csv(std::ostream& os, const std::string& phi_name,
                         const std::vector<labs::ShiftSumReport>& rows, int bandwidth);

void write_fourier_shift_csv(std::ostream& os, const std::string& phi_name, int N, int bandwidth,
                             const std::vector<labs::FourierShiftReport>& rows);

void write_cube_csv(std::ostream& os, const std::string& phi_name, const std::string& psi_name, int N,
                    const std::vector<labs::CubeReport>& rows);

void write_twist_csv(std::ostream& os, const labs::TwistReport& r, const std::string& delta_name,
                     const std::string& phi_name, const std::string& psi_name);

void write_positive_csv(std::ostream& os, const std::vector<double>& lambdas,
                        const std::vector<std::string>& names, int N, const labs::PositiveReport& r);

}  // namespace cdyn
