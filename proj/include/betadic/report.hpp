#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "betadic/beta_adic.hpp"
#include "betadic/local.hpp"
#include "betadic/prime_ideals.hpp"
#include "betadic/rational_erdos.hpp"

namespace betadic::report {

using nlohmann::json;

// Integers are written as decimal strings; numbers are accepted on input.
json to_json(const Int& value);
Int int_from_json(const json& value, const std::string& field);
json to_json(const std::vector<Int>& values);
std::vector<Int> ints_from_json(const json& value, const std::string& field);
json to_json(const RingElement& element);

// {"min_poly": [c0, ..., 1]}
json ring_to_json(const NumberRing& ring);
NumberRing ring_from_json(const json& spec);

json factor_to_json(const PrimeIdealFactor& factor, std::uint64_t multiplicity = 0);
json decomposition_to_json(const PrimeDecomposition& decomposition);
json factorization_to_json(const BetaFactorization& factorization);

// kernel-report
json kernel_report(const LocalContext& ctx, const RingElement& alpha, const std::vector<KernelEntry>& kernels,
                   std::optional<std::uint64_t> v, std::optional<std::uint64_t> lifting_threshold);
// freq-report
json freq_report(const DigitSystem& ds, const OrbitDigitStats& stats);
// complexity-report; the limit is rendered to 12 decimal digits.
json complexity_report(const BlockComplexity& complexity);

std::string format_fixed(double value, int digits = 12);

// erdos.csv: N,M_N,bound (one row per n)
void write_erdos_csv(std::ostream& out, const ErdosCount& count);
// dw.csv: m,b,f_num,f_den,float
void write_dw_csv(std::ostream& out, const std::vector<DupuyWeirichAverage>& rows);

}  // namespace betadic::report
