#include "doctest.h"
#include "meixner/io.hpp"
#include "meixner/verify.hpp"

using namespace meixner;

TEST_CASE("sequence renderings") {
    const PolySequence seq = monic_from_recurrence(recurrence_of(FamilyInstance(Charlier{Rat(1)})), 2);
    const std::string csv = sequence_csv(seq);
    CHECK(csv.rfind("n,k,coefficient\n", 0) == 0);
    CHECK(csv.find("2,0,1\n2,1,-3\n2,2,1\n") != std::string::npos);
    CHECK(sequence_json(seq)[2] == Json::array({"1", "-3", "1"}));
    const std::string tex = sequence_latex(seq);
    CHECK(tex.find("P_{2}(x) &= x^{2} - 3x + 1") != std::string::npos);
    CHECK(to_string(seq[2]) == "x^2 - 3*x + 1");
}

TEST_CASE("classification json") {
    const Json j = to_json(classify(recurrence_of(FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)})), 8));
    CHECK(j["case"] == "IV-Meixner");
    CHECK(j["family"] == "meixner:beta=3/2,c=1/4");
    CHECK(j["standard"] == true);
    CHECK(j["f_coeffs"].size() == 9);
    CHECK(j["favard"]["kind"].is_string());
}

TEST_CASE("limit csv") {
    const LimitRecord r = limit_transition(LimitEdge::CharlierToHermite, 2, Rat(1), 3);
    const std::string csv = limits_csv({r});
    CHECK(csv.rfind("edge,n,x,eps,error,order\n", 0) == 0);
    CHECK(csv.find("charlier-hermite,2,1,0.10000000000000001,0.4") != std::string::npos);
}

TEST_CASE("verify reports are reproducible") {
    VerifyOptions opt;
    opt.n_max = 8;
    const FamilyInstance fam(Krawtchouk{Rat(1, 2), 4});
    const VerifyReport a = verify_family(fam, opt);
    const VerifyReport b = verify_family(fam, opt);
    CHECK(a.passed());
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(verify_identities(opt).to_json().dump() == verify_identities(opt).to_json().dump());
}
