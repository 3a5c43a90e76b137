#include "undecim/certificate.hpp"

#include <sstream>
#include <stdexcept>

namespace undecim::solver {

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j;
  j["equation"] = cert.equation;
  j["case"] = cert.case_label;
  j["branches"] = nlohmann::json::array();
  for (const BranchRecord& b : cert.branches) {
    j["branches"].push_back({{"premise", b.premise},
                             {"method", b.method},
                             {"verdict", b.verdict},
                             {"witness", b.witness}});
  }
  j["solutions"] = nlohmann::json::array();
  for (const CertSolution& s : cert.solutions) {
    j["solutions"].push_back({{"x", s.x.get_str()},
                              {"y", s.y.get_str()},
                              {"k", s.k},
                              {"n", s.n},
                              {"lambda", s.lambda}});
  }
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate cert;
    cert.equation = j.at("equation").get<std::string>();
    cert.case_label = j.at("case").get<std::string>();
    for (const auto& b : j.at("branches")) {
      cert.branches.push_back({b.at("premise").get<std::string>(),
                               b.at("method").get<std::string>(),
                               b.at("verdict").get<std::string>(),
                               b.at("witness").get<std::string>()});
    }
    for (const auto& s : j.at("solutions")) {
      CertSolution sol;
      sol.x = BigInt(s.at("x").get<std::string>());
      sol.y = BigInt(s.at("y").get<std::string>());
      sol.k = s.at("k").get<long>();
      sol.n = s.at("n").get<long>();
      sol.lambda = s.at("lambda").get<long>();
      cert.solutions.push_back(std::move(sol));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("certificate_from_json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(std::string("certificate_from_json: ") + e.what());
  }
}

std::string to_text(const Certificate& cert) {
  std::ostringstream out;
  out << "certificate:\n";
  out << "  equation: " << cert.equation << "\n";
  out << "  case: " << cert.case_label << "\n";
  for (std::size_t i = 0; i < cert.branches.size(); ++i) {
    const BranchRecord& b = cert.branches[i];
    out << "  branch " << (i + 1) << ":\n";
    out << "    premise: " << b.premise << "\n";
    out << "    method: " << b.method << "\n";
    out << "    verdict: " << b.verdict << "\n";
    out << "    witness: " << b.witness << "\n";
  }
  if (cert.solutions.empty()) {
    out << "  solutions: none\n";
  } else {
    out << "  solutions:\n";
    for (const CertSolution& s : cert.solutions) {
      out << "    x=" << s.x << " y=" << s.y << " k=" << s.k << " n=" << s.n
          << " lambda=" << s.lambda << "\n";
    }
  }
  return out.str();
}

}  // namespace undecim::solver
