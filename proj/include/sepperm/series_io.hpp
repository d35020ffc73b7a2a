#pragma once

// Canonical JSON form of a truncated series and an on-disk cache keyed by
// (engine version, series name, order).
//
//   {"coefficients":{"1":[[[0,0,1,1,1,1],"1","1"]],...},
//    "engine":"sepperm-1","name":"S","order":12}
//
// Each coefficient entry is (exponent vector in p,q,x,y,u,v order,
// numerator, denominator) with the big integers as decimal strings. Terms
// appear in packed-monomial order, so equal series serialize identically.

#include <sepperm/series.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sepperm {

inline constexpr const char* kEngineVersion = "sepperm-1";

inline nlohmann::json series_to_json(const RSeries& s, const std::string& name) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (int n = 0; n <= s.order(); ++n) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : s[n].terms()) {
      auto e = m.exponents();
      terms.push_back({nlohmann::json(std::vector<int>(e.begin(), e.end())),
                       boost::multiprecision::numerator(c).str(),
                       boost::multiprecision::denominator(c).str()});
    }
    coeffs[std::to_string(n)] = std::move(terms);
  }
  return {{"engine", kEngineVersion}, {"name", name}, {"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

inline RSeries series_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  RSeries s(order);
  for (const auto& [key, terms] : j.at("coefficients").items()) {
    const int n = std::stoi(key);
    if (n < 0 || n > order) throw std::invalid_argument("coefficient index out of range: " + key);
    std::vector<Poly<Rational>::Term> out;
    for (const auto& t : terms) {
      auto e = t.at(0).get<std::vector<int>>();
      if (e.size() != kNumVars) throw std::invalid_argument("exponent vector must have 6 entries");
      std::array<int, kNumVars> ex{};
      std::copy(e.begin(), e.end(), ex.begin());
      Rational c(Integer(t.at(1).get<std::string>()), Integer(t.at(2).get<std::string>()));
      out.emplace_back(Monomial::from_exponents(ex), c);
    }
    s.coeff(n) = Poly<Rational>::from_terms(std::move(out));
  }
  return s;
}

inline std::string dump_series(const RSeries& s, const std::string& name) {
  return series_to_json(s, name).dump() + "\n";
}

/// Directory of cached series. A disabled cache never reads or writes.
class SeriesCache {
 public:
  SeriesCache() = default;
  explicit SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return dir_.has_value(); }

  std::filesystem::path path_for(const std::string& name, int order) const {
    std::string safe;
    for (char c : name) safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
    return *dir_ / (safe + ".N" + std::to_string(order) + "." + kEngineVersion + ".json");
  }

  std::optional<RSeries> load(const std::string& name, int order) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(name, order));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || j.value("engine", "") != kEngineVersion || j.value("name", "") != name ||
        j.value("order", -1) != order) {
      return std::nullopt;
    }
    return series_from_json(j);
  }

  void store(const std::string& name, const RSeries& s) const {
    if (!enabled()) return;
    std::filesystem::create_directories(*dir_);
    std::ofstream out(path_for(name, s.order()), std::ios::binary);
    out << dump_series(s, name);
    if (!out) throw std::runtime_error("failed to write series cache in " + dir_->string());
  }

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace sepperm
