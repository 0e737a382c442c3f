#include <doctest.h>

#include "qs/projectors.hpp"

using namespace qs;

namespace {

std::string failure_text(const VerificationReport& r) { return r.passed() ? "" : r.to_text(); }

}  // namespace

TEST_CASE("top stratum with one index is the identity") {
    auto r = appendix_top_projectors(2, 1, 1);
    CHECK_MESSAGE(r.passed(), failure_text(r));
    StrataModel S(2, 1, 1);
    CHECK(S.top_basis().size() == 1);
}

TEST_CASE("excess classes") {
    StrataModel S(4, 2, 2);
    CHECK(S.C() == S.C_alternative());
    CHECK(S.D() == S.D_alternative());
    // m = 0: no insertion.
    StrataModel T(4, 0, 2);
    CHECK(T.C() == T.G().one());
    CHECK(T.D() == T.G().one());
}

TEST_CASE("m = 0 top stratum is the Grassmannian projector") {
    StrataModel S(4, 0, 2);
    const auto& G = S.G();
    for (const auto& k : G.basis()) {
        auto w = G.basis_element(k);
        CHECK(S.pi_down(w) == G.projector_down_all(Flavor::Delta, w));
    }
    CHECK(appendix_top_projectors(4, 0, 2).passed());
}

TEST_CASE("empty boxes give vacuous reports") {
    auto top = appendix_top_projectors(3, 2, 2);
    CHECK(top.passed());
    CHECK(top.cells == 0);
    CHECK(top.observations.count("empty_box"));
    auto low = appendix_lowest_projectors(3, 2, 1);
    CHECK(low.passed());
    CHECK(low.cells == 0);
    auto cross = appendix_cross_orthogonality(4, 0, 2);
    CHECK(cross.passed());
    CHECK(cross.observations.count("vacuous"));
}

TEST_CASE("lowest stratum sign") {
    auto r = appendix_lowest_projectors(2, 1, 1);
    CHECK_MESSAGE(r.passed(), failure_text(r));
    CHECK(r.observations.at("computed_sign") == "-1");
    auto s = appendix_lowest_projectors(5, 2, 2);
    CHECK_MESSAGE(s.passed(), failure_text(s));
    CHECK(s.observations.at("computed_sign") == "1");
}

TEST_CASE("appendix suites for n <= 5, m <= 2") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= 2; ++m)
            for (int d = 1; d <= n; ++d) {
                auto t = appendix_top_projectors(n, m, d, 4);
                CHECK_MESSAGE(t.passed(), n << m << d << failure_text(t));
                auto l = appendix_lowest_projectors(n, m, d, 4);
                CHECK_MESSAGE(l.passed(), n << m << d << failure_text(l));
                auto c = appendix_cross_orthogonality(n, m, d, 4);
                CHECK_MESSAGE(c.passed(), n << m << d << failure_text(c));
            }
}

TEST_CASE("Cayley relations") {
    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d <= n - 1; ++d) {
            auto r = cayley_relations(d, n, 4);
            CHECK_MESSAGE(r.passed(), d << " " << n << failure_text(r));
            int l = n - d;
            std::string stated = l % 2 ? "-1" : "1";
            CHECK(r.observations.at("stated_sign") == stated);
            CHECK(r.observations.at("sign_with_c_l(Q^v)") == stated);
            CHECK(r.observations.at("sign_with_c_l(Q)") == "1");
        }
    CHECK_THROWS_AS(cayley_relations(0, 3), std::domain_error);
    CHECK_THROWS_AS(cayley_relations(3, 3), std::domain_error);
}

TEST_CASE("Cayley box sizes at the two ends") {
    for (int n = 2; n <= 6; ++n) {
        auto proj = cayley_relations(1, n);
        CHECK(proj.observations.at("top_box_size") == std::to_string(n - 1));
        CHECK(proj.observations.at("low_box_size") == "1");
        auto blow = cayley_relations(n - 1, n);
        CHECK(blow.observations.at("top_box_size") == "1");
        CHECK(blow.observations.at("low_box_size") == std::to_string(n - 1));
    }
}

TEST_CASE("appendix at m = 1 specializes to Cayley when F is trivial") {
    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d <= n - 1; ++d) {
            StrataModel A(n, 1, d);
            StrataModel C(n, 1, d, true);
            const auto& GA = A.G();
            const auto& GC = C.G();
            auto target = GC.ring();
            for (const auto& k : GA.basis()) {
                auto pa = A.pi_down(A.C() * GA.basis_element(k));
                auto pc = C.pi_down(C.C() * GC.basis_element(k));
                for (const auto& [lambda, v] : pa) CHECK(v.restrict_to(target) == pc.at(lambda));
                auto ga = A.gamma_down(GA.basis_element(k));
                auto gc = C.gamma_down(GC.basis_element(k));
                for (const auto& [lambda, v] : ga) CHECK(v.restrict_to(target) == gc.at(lambda));
            }
        }
}
