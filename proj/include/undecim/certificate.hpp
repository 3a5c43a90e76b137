#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "undecim/ntheory.hpp"

namespace undecim::solver {

// One decision in a case analysis: what was assumed, how it was decided,
// and the computed evidence.
struct BranchRecord {
  std::string premise;
  std::string method;
  std::string verdict;  // "established" | "eliminated" | "solution"
  std::string witness;
  bool operator==(const BranchRecord&) const = default;
};

struct CertSolution {
  BigInt x;
  BigInt y;
  long k = 0;
  long n = 0;
  long lambda = 0;
  bool operator==(const CertSolution&) const = default;
};

// Machine-checkable transcript of one case of the equation's analysis.
struct Certificate {
  std::string equation;
  std::string case_label;  // "n=3" | "n=4" | "prime n>=5" | "reduction"
  std::vector<BranchRecord> branches;
  std::vector<CertSolution> solutions;
  bool operator==(const Certificate&) const = default;
};

// Field names are the stable interchange schema:
// {equation, case, branches:[{premise, method, verdict, witness}],
//  solutions:[{x, y, k, n, lambda}]} with x, y as decimal strings.
nlohmann::json to_json(const Certificate& cert);

// Inverse of to_json; malformed documents raise std::domain_error.
Certificate certificate_from_json(const nlohmann::json& j);

// Key-value rendering with nested branch records, for terminal output.
std::string to_text(const Certificate& cert);

}  // namespace undecim::solver
