#include "meixner/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace meixner {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string latex_poly(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rat mag = c.abs();
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string coef;
        if (!(mag == Rat(1)) || k == 0) {
            coef = mag.is_integer() ? mag.str() : "\\tfrac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}";
        }
        out += coef;
        if (k >= 1) out += "x";
        if (k > 1) out += "^{" + std::to_string(k) + "}";
    }
    return out;
}

}  // namespace

Json series_json(const RatSeries& s) {
    Json a = Json::array();
    for (const auto& c : s.coeffs()) a.push_back(c.str());
    return a;
}

Json poly_json(const RatPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

Json favard_json(const FavardReport& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["terminal_degree"] = r.terminal_degree ? Json(*r.terminal_degree) : Json(nullptr);
    j["first_nonnegative"] = r.first_nonnegative ? Json(*r.first_nonnegative) : Json(nullptr);
    return j;
}

Json to_json(const ClassificationResult& r) {
    Json j;
    j["case"] = to_string(r.case_tag);
    j["spec"] = {{"lambda", r.spec.lambda_rec.str()},
                 {"k2", r.spec.k2.str()},
                 {"kappa", r.spec.kappa.str()},
                 {"l1", r.spec.l1.str()}};
    j["root_structure"] = to_string(r.roots.tag);
    j["alpha"] = r.roots.alpha.str();
    j["beta"] = r.roots.beta.str();
    j["discriminant"] = r.roots.discriminant.str();
    j["favard"] = favard_json(r.favard);
    Json params = Json::object();
    for (const auto& [name, v] : r.params) params[name] = v.str();
    j["params"] = params;
    j["scale"] = r.scale.str();
    j["shift"] = r.shift.str();
    j["family"] = r.family ? Json(r.family->str()) : Json(nullptr);
    j["standard"] = r.is_standard();
    j["f_coeffs"] = series_json(r.pair.f());
    j["u_coeffs"] = series_json(r.pair.u());
    j["t_coeffs"] = series_json(r.pair.t());
    return j;
}

Json to_json(const CommutationReport& r) {
    Json j;
    j["n_max"] = r.n_max;
    j["commutation_failures"] = r.commutation_failures;
    j["action_failures"] = r.action_failures;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const EigenEquationReport& r) {
    Json j;
    j["n_max"] = r.n_max;
    j["operator_identity"] = "(n+2) P_n = (x + l1 + (n+1)(alpha+beta)) t(D) P_n + 2 t'(D) P_n + (k2 - n alpha beta) t(D)^2 P_n";
    j["operator_residuals"] = r.operator_residuals;
    j["operator_identity_holds"] = r.operator_identity_holds;
    j["family_equation"] = r.family_equation;
    j["family_checked"] = r.family_checked;
    j["family_failures"] = r.family_failures;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const MgfReport& r) {
    Json j;
    j["order"] = r.order;
    j["moment_side"] = series_json(r.moment_side);
    j["pair_side"] = series_json(r.pair_side);
    j["first_difference"] = r.first_difference ? Json(*r.first_difference) : Json(nullptr);
    j["passed"] = r.passed();
    return j;
}

Json to_json(const GramReport& r) {
    Json j;
    j["family"] = r.family;
    j["method"] = r.method;
    j["base_constant"] = r.base_constant;
    j["n_max"] = r.n_max;
    j["exact"] = r.exact;
    j["entries"] = r.entries;
    j["truncation"] = r.truncation ? Json(*r.truncation) : Json(nullptr);
    j["tail_bound"] = r.tail_bound;
    j["off_diagonal_bound"] = r.off_diagonal_bound;
    j["max_off_diagonal"] = r.max_off_diagonal;
    j["min_diagonal"] = r.min_diagonal;
    j["weight_integral_max_off_diagonal"] =
        r.weight_integral_max_off_diagonal ? Json(*r.weight_integral_max_off_diagonal) : Json(nullptr);
    j["passed"] = r.passed;
    return j;
}

Json to_json(const MomentMatchReport& r) {
    Json j;
    j["family"] = r.family;
    j["method"] = r.method;
    j["recurrence_moments"] = r.recurrence_moments;
    j["weight_moments"] = r.weight_moments;
    j["truncation"] = r.truncation ? Json(*r.truncation) : Json(nullptr);
    j["first_mismatch"] = r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["exact"] = r.exact;
    j["abs_error"] = r.abs_error;
    j["holds"] = r.holds;
    return j;
}

Json to_json(const LimitRecord& r) {
    Json j;
    j["edge"] = to_string(r.edge);
    j["n"] = r.n;
    j["x"] = r.x.str();
    j["eps"] = r.eps;
    j["error"] = r.error;
    Json orders = Json::array();
    for (double o : r.order) orders.push_back(number_or_null(o));
    j["order"] = orders;
    j["exact_zero"] = r.exact_zero;
    j["monotone"] = r.monotone;
    j["asymptotic_order"] = number_or_null(r.asymptotic_order);
    j["passed"] = r.passed();
    return j;
}

std::string sequence_csv(const PolySequence& seq) {
    std::ostringstream os;
    os << "n,k,coefficient\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const auto& c = seq[n].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) os << n << ',' << k << ',' << c[k].str() << '\n';
    }
    return os.str();
}

std::string sequence_latex(const PolySequence& seq) {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
        os << "P_{" << n << "}(x) &= " << latex_poly(seq[n]) << (n + 1 < seq.size() ? " \\\\\n" : "\n");
    }
    os << "\\end{align*}\n";
    return os.str();
}

Json sequence_json(const PolySequence& seq) {
    Json a = Json::array();
    for (const auto& p : seq) a.push_back(poly_json(p));
    return a;
}

std::string limits_csv(const std::vector<LimitRecord>& recs) {
    std::ostringstream os;
    os << "edge,n,x,eps,error,order\n";
    for (const auto& r : recs) {
        for (std::size_t k = 0; k < r.eps.size(); ++k) {
            os << to_string(r.edge) << ',' << r.n << ',' << r.x.str() << ',' << format_double(r.eps[k]) << ','
               << format_double(r.error[k]) << ',';
            if (k > 0 && std::isfinite(r.order[k - 1])) os << format_double(r.order[k - 1]);
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace meixner
