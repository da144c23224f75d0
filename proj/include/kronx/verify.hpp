#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kronx::verify {

struct Options {
    int max_twoj = 5;
    double tol = 1e-10;
    std::uint64_t seed = 20240601;
    int threads = 1;
};

struct Check {
    std::string name;
    std::string detail;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// intertwining, su2, coupling, kron, perm, hadamard, lemmas, fft, models, jc
const std::vector<std::string>& suite_names();
// throws DomainError for an unknown suite
SuiteResult run_suite(const std::string& name, const Options& opt);

}  // namespace kronx::verify
