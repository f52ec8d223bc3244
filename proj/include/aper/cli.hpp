#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "aper/limits.hpp"

namespace aper::cli {

struct Config {
  std::string alphabet = "ab";
  int kmax = 4;         // search bound for separating depths
  int check_depth = 4;  // cross-check depth for EQUAL answers
  bool cross_check = true;
  std::string format = "text";  // text | dot
  Limits limits{};
};

// Each command writes results to out, diagnostics to err, and returns the
// process exit code: 0 success (eq: equal), 1 eq-distinct, 2 error.
int cmd_eq(const Config& config, const std::string& left,
           const std::string& right, std::ostream& out, std::ostream& err);
int cmd_canon(const Config& config, const std::string& term, std::ostream& out,
              std::ostream& err);
int cmd_project(const Config& config, const std::string& term, int depth,
                std::ostream& out, std::ostream& err);
int cmd_factors(const Config& config, const std::string& term,
                const std::string& which, std::ostream& out, std::ostream& err);
int cmd_regjs(const Config& config, const std::string& term, std::ostream& out,
              std::ostream& err);
int cmd_eval(const Config& config, const std::string& term,
             const std::string& monoid_path, const std::string& assignment,
             std::ostream& out, std::ostream& err);
int cmd_quotient(const Config& config, int depth, std::ostream& out,
                 std::ostream& err);
int cmd_unfold(const Config& config, const std::string& term, std::uint64_t n,
               std::ostream& out, std::ostream& err);

}  // namespace aper::cli
