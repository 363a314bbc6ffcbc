#pragma once

// JSON forms of the library values and the plain-text point and curve files.
//
// Point file:  "p=<modulus>" then one "x y z" line per point.
// Curve file:  "p=<modulus>", optionally "irreducible=<0|1>", then one
//              "e1 e2 e3 c" line per monomial x^e1 y^e2 z^e3 with coefficient c.
// Blank lines and lines starting with '#' are ignored in both.

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "charseq/linsys.hpp"
#include "charseq/macaulay.hpp"
#include "charseq/pointlab.hpp"
#include "charseq/realize.hpp"
#include "charseq/seqcalc.hpp"

namespace charseq {

using Json = nlohmann::ordered_json;

/// "3,3,4" -> {3, 3, 4}; Error(Parse) on anything else. Empty text is an
/// empty list.
std::vector<int> parse_int_list(std::string_view text);
std::vector<std::int64_t> parse_int64_list(std::string_view text);
std::string join(const std::vector<int>& v, char sep = ',');
std::string join(const std::vector<std::int64_t>& v, char sep = ',');

Json to_json(const BigInt& v);
Json to_json(const MacaulayRep& rep);
Json to_json(const CharSeq& seq);
Json to_json(const HilbertFn& fn);
Json to_json(const RelCharSeq& rel);
Json to_json(const ValidationReport& report);
Json to_json(const GapSplit& split);
Json to_json(const EqualPhiVerdict& v);
Json to_json(const MaxSysVerdict& v);
Json to_json(const ConjectureReport& report);
Json to_json(const PointGroup& y);

CharSeq charseq_from_json(const Json& j);
RelCharSeq rel_from_json(const Json& j);

PointGroup read_points(std::istream& in);
void write_points(std::ostream& out, const PointGroup& y);
PlaneCurve read_curve(std::istream& in);
void write_curve(std::ostream& out, const PlaneCurve& x);

PointGroup load_points(const std::string& path);
PlaneCurve load_curve(const std::string& path);

}  // namespace charseq
