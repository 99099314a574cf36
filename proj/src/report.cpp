#include "betadic/report.hpp"

#include <cstdio>
#include <ostream>

#include "betadic/errors.hpp"

namespace betadic::report {

json to_json(const Int& value) { return to_string(value); }

Int int_from_json(const json& value, const std::string& field) {
  if (value.is_string()) return parse_int(value.get<std::string>());
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Int(std::to_string(value.get<std::uint64_t>()));
    return Int(std::to_string(value.get<std::int64_t>()));
  }
  throw Error(ErrorKind::InvalidArgument, "field '" + field + "' must be an integer or decimal string");
}

json to_json(const std::vector<Int>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

std::vector<Int> ints_from_json(const json& value, const std::string& field) {
  if (!value.is_array()) throw Error(ErrorKind::InvalidArgument, "field '" + field + "' must be an array");
  std::vector<Int> out;
  for (const auto& v : value) out.push_back(int_from_json(v, field));
  return out;
}

json to_json(const RingElement& element) { return to_json(element.coords()); }

json ring_to_json(const NumberRing& ring) { return json{{"min_poly", to_json(ring.min_poly())}}; }

NumberRing ring_from_json(const json& spec) {
  if (!spec.is_object() || !spec.contains("min_poly")) {
    throw Error(ErrorKind::InvalidArgument, "ring specification needs a 'min_poly' array");
  }
  return NumberRing(ints_from_json(spec.at("min_poly"), "min_poly"));
}

json factor_to_json(const PrimeIdealFactor& factor, std::uint64_t multiplicity) {
  json j{{"p", to_json(factor.p)}, {"g_poly", to_json(factor.g_poly)}, {"e", factor.e}, {"f", factor.f}};
  if (multiplicity > 0) j["g"] = multiplicity;
  return j;
}

json decomposition_to_json(const PrimeDecomposition& decomposition) {
  json factors = json::array();
  for (const auto& f : decomposition.factors) factors.push_back(factor_to_json(f));
  return json{{"p", to_json(decomposition.p)}, {"factors", factors}, {"seed", decomposition.seed}};
}

json factorization_to_json(const BetaFactorization& factorization) {
  json factors = json::array();
  for (const auto& f : factorization.factors) factors.push_back(factor_to_json(f.prime.factor(), f.multiplicity));
  return json{{"beta", to_json(factorization.beta)},
              {"norm", to_json(factorization.norm)},
              {"factors", factors},
              {"seed", factorization.seed}};
}

json kernel_report(const LocalContext& ctx, const RingElement& alpha, const std::vector<KernelEntry>& kernels,
                   std::optional<std::uint64_t> v, std::optional<std::uint64_t> lifting_threshold) {
  json ks = json::array();
  for (const auto& k : kernels) ks.push_back({{"r", k.r}, {"size", to_json(k.size)}});
  json j{{"p", to_json(ctx.p())},
         {"e", ctx.e()},
         {"f", ctx.f()},
         {"g_poly", to_json(ctx.factor().g_poly)},
         {"alpha", to_json(alpha)},
         {"kernels", ks},
         {"v", v ? json(*v) : json(nullptr)},
         {"pattern_ok", v.has_value()}};
  if (lifting_threshold) j["v_l"] = *lifting_threshold;
  return j;
}

json freq_report(const DigitSystem& ds, const OrbitDigitStats& stats) {
  json counts = json::object();
  json freq = json::array();
  json digits = json::array();
  for (std::size_t i = 0; i < stats.counts.size(); ++i) {
    counts[std::to_string(i)] = to_json(stats.counts[i]);
    freq.push_back(to_string(stats.freq[i]));
    digits.push_back(to_json(ds.digits()[i]));
  }
  return json{{"m", stats.m},
              {"h_m", to_json(stats.h_m)},
              {"counts", counts},
              {"freq", freq},
              {"digits", digits},
              {"target", "1/" + std::to_string(ds.radix_size())}};
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

json complexity_report(const BlockComplexity& complexity) {
  json points = json::array();
  for (const auto& p : complexity.points) {
    points.push_back({{"m", p.m}, {"blocks", to_json(p.blocks)}, {"slope", format_fixed(p.slope)}});
  }
  json limit{{"expression", complexity.limit.to_string()}, {"value", format_fixed(complexity.limit.value())}};
  if (auto exact = complexity.limit.exact()) limit["exact"] = to_string(*exact);
  return json{{"points", points}, {"limit", limit}};
}

void write_erdos_csv(std::ostream& out, const ErdosCount& count) {
  out << "N,M_N,bound\n";
  for (std::uint64_t n = 1; n <= count.N; ++n) {
    out << n << ',' << count.running[n - 1] << ',' << format_fixed(narkiewicz_bound(n), 6) << '\n';
  }
}

void write_dw_csv(std::ostream& out, const std::vector<DupuyWeirichAverage>& rows) {
  out << "m,b,f_num,f_den,float\n";
  for (const auto& row : rows) {
    for (std::size_t b = 0; b < row.freq.size(); ++b) {
      out << row.m << ',' << b << ',' << to_string(row.freq[b].get_num()) << ',' << to_string(row.freq[b].get_den())
          << ',' << format_fixed(row.freq[b].get_d()) << '\n';
    }
  }
}

}  // namespace betadic::report
