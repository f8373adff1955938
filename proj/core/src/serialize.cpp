#include "schubres/resolution.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace schubres {

namespace {

nlohmann::ordered_json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

}  // namespace

std::string betti_json(const BettiTable& b, const TableParams& p, int codim) {
  nlohmann::ordered_json j;
  j["params"] = {{"n", p.n}, {"k", p.k}, {"r", p.r}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, e] : b.entries()) {
    nlohmann::ordered_json row;
    row["i"] = key.first;
    row["degree"] = key.second;
    row["mult"] = integer_json(e.multiplicity);
    auto schur = nlohmann::ordered_json::array();
    auto prov = e.provenance;
    std::sort(prov.begin(), prov.end());
    for (const auto& [label, dim] : prov) schur.push_back({label, integer_json(dim)});
    row["schur"] = schur;
    rows.push_back(row);
  }
  j["betti"] = rows;
  j["codim"] = codim;
  auto kp = nlohmann::ordered_json::array();
  for (const auto& c : k_polynomial(b)) kp.push_back(integer_json(c));
  j["k_polynomial"] = kp;
  return j.dump();
}

std::string betti_grid(const BettiTable& b) {
  if (b.empty()) return "(empty table)\n";
  int imax = b.length();
  int dmin = b.entries().begin()->first.second, dmax = dmin;
  size_t width = 1;
  for (const auto& [key, e] : b.entries()) {
    dmin = std::min(dmin, key.second);
    dmax = std::max(dmax, key.second);
    width = std::max(width, e.multiplicity.str().size());
  }
  for (int d = dmin; d <= dmax; ++d) width = std::max(width, std::to_string(d).size());
  int w = static_cast<int>(width) + 1;

  std::ostringstream os;
  os << std::setw(4) << "i\\d" << " |";
  for (int d = dmin; d <= dmax; ++d) os << std::setw(w) << d;
  os << "\n" << std::string(5, '-') << "+" << std::string(static_cast<size_t>(w) * (dmax - dmin + 1), '-') << "\n";
  for (int i = 0; i <= imax; ++i) {
    os << std::setw(4) << i << " |";
    for (int d = dmin; d <= dmax; ++d) {
      Integer m = b.at(i, d);
      os << std::setw(w) << (m == 0 ? std::string(".") : m.str());
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace schubres
