#include <doctest.h>

#include "crwp/crossval.hpp"
#include "crwp/faults.hpp"
#include "crwp/pipeline.hpp"
#include "support.hpp"

using namespace crwp;

namespace {

void check_same(const CrossReport& a, const CrossReport& b) {
    CHECK(a.checked == b.checked);
    CHECK(a.accepted == b.accepted);
    CHECK(a.equal == b.equal);
    CHECK(a.disagreements == b.disagreements);
    REQUIRE(a.first.has_value() == b.first.has_value());
    if (a.first) {
        CHECK(a.first->word == b.first->word);
        CHECK(a.first->recognizer == b.first->recognizer);
    }
}

}  // namespace

TEST_CASE("serial and parallel kernels give the same report") {
    const CRSemigroup t3 = testing::load_t3();
    const Pda wp = build_wp_recognizer(t3);
    const auto oracle = semigroup_oracle(t3);
    check_same(cross_validate(wp, t3.alphabet(), oracle, 5, Kernel::Serial),
               cross_validate(wp, t3.alphabet(), oracle, 5, Kernel::Parallel));

    const Pda bad = build_wp_recognizer(t3, corrupt_factor_hook(t3));
    const CrossReport serial = cross_validate(bad, t3.alphabet(), oracle, 5, Kernel::Serial);
    const CrossReport parallel = cross_validate(bad, t3.alphabet(), oracle, 5, Kernel::Parallel);
    CHECK_FALSE(serial.agree());
    check_same(serial, parallel);
}

TEST_CASE("pair counts") {
    const CRSemigroup t2 = testing::load_t2();
    const CrossReport r = cross_validate(build_wp_recognizer(t2), t2.alphabet(), semigroup_oracle(t2), 4);
    // pairs (u, v) with |u|, |v| >= 1 and |u| + |v| <= 4 over 4 letters
    std::size_t expect = 0;
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; a + b <= 4; ++b) expect += std::size_t{1} << (2 * (a + b));
    CHECK(r.checked == expect);
    CHECK(r.agree());
    CHECK(r.accepted == r.equal);
}

TEST_CASE("faults are caught with a witness") {
    for (const CRSemigroup& s : {testing::load_t2(), testing::load_t3()}) {
        const auto oracle = semigroup_oracle(s);
        const CrossReport f = cross_validate(build_wp_recognizer(s, corrupt_factor_hook(s)), s.alphabet(), oracle, 6);
        CHECK_FALSE(f.agree());
        REQUIRE(f.first);
        CHECK(std::count(f.first->word.begin(), f.first->word.end(), "#") == 1);

        const CRSemigroup m = corrupt_structure_map(s);
        CHECK_FALSE(m == s);
        const CrossReport g = cross_validate(build_wp_recognizer(m), s.alphabet(), oracle, 6);
        CHECK_FALSE(g.agree());
        CHECK(g.first);
    }
}
