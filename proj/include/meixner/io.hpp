#ifndef MEIXNER_IO_HPP
#define MEIXNER_IO_HPP

// JSON and CSV renderings. Exact values are strings ("p/q", or "a+b*sqrt(d)"
// for surds); floating-point fields appear only in numeric reports.

#include <string>
#include <vector>

#include "json.hpp"
#include "meixner/classify.hpp"
#include "meixner/ortho.hpp"

namespace meixner {

using Json = nlohmann::ordered_json;

Json series_json(const RatSeries& s);
/// Ascending coefficient strings.
Json poly_json(const RatPoly& p);
Json favard_json(const FavardReport& r);

Json to_json(const ClassificationResult& r);
Json to_json(const CommutationReport& r);
Json to_json(const EigenEquationReport& r);
Json to_json(const MgfReport& r);
Json to_json(const GramReport& r);
Json to_json(const MomentMatchReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const LimitRecord& r);

/// Rows "n,k,coefficient" with exact rational cells.
std::string sequence_csv(const PolySequence& seq);
/// One "P_n(x) &= ... \\" line per polynomial.
std::string sequence_latex(const PolySequence& seq);
Json sequence_json(const PolySequence& seq);

/// Rows "edge,n,x,eps,error,order".
std::string limits_csv(const std::vector<LimitRecord>& recs);

}  // namespace meixner

#endif  // MEIXNER_IO_HPP
