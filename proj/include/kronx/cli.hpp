#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kronx::cli {

enum ExitCode : int { ok = 0, validation = 2, verification = 3, usage = 64 };

// argv[0] is the program name
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

// ascending eigenvalues merged within tol, as (value, multiplicity)
std::vector<std::pair<double, int>> merge_spectrum(std::vector<double> values, double tol = 1e-9);
std::string spectrum_csv(const std::vector<std::pair<double, int>>& spectrum);

}  // namespace kronx::cli
