#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "hyperoct/centralizer.hpp"
#include "hyperoct/cover.hpp"
#include "hyperoct/cover_file.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/literal.hpp"
#include "oracles.hpp"

using namespace hyperoct;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<std::size_t>> one_based) {
  for (auto& c : one_based)
    for (auto& i : c) --i;
  return Permutation::from_cycles(n, one_based);
}

SignedPerm signs(std::size_t n, std::uint64_t bits) { return SignedPerm::from_signs(n, SignVector(bits)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fixture(const std::string& name) {
  return read_file(std::string(HYPEROCT_DATA_DIR) + "/covers/" + name);
}

// Σ_{i<t} v_{ρ^i(k)} with v = ℓ'⁻¹·(signs of ℓ), computed on plain arrays.
int entry_sum(const SignedPerm& l, std::size_t t, std::size_t k, bool backwards) {
  const std::size_t n = l.degree();
  std::vector<std::size_t> fwd(n), bwd(n);
  for (std::size_t i = 0; i < n; ++i) {
    fwd[i] = l.perm()(i);
    bwd[fwd[i]] = i;
  }
  // signs of ℓ at fwd[i] is v_i.
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = l.signs().test(fwd[i]) ? 1 : 0;
  int sum = 0;
  std::size_t p = k;
  for (std::size_t i = 0; i < t; ++i) {
    sum += v[p];
    p = backwards ? bwd[p] : fwd[p];
  }
  return sum % 2;
}

using Profile = std::vector<std::tuple<std::size_t, std::size_t, int>>;

Profile profile(const std::vector<ComponentData>& cs) {
  Profile p;
  for (const auto& c : cs) p.emplace_back(c.e, c.t, static_cast<int>(c.d % 2));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_SUITE("branched_cover") {

TEST_CASE("TorusMonodromy validates its invariants") {
  CHECK_NOTHROW(TorusMonodromy(SignedPerm::from_perm(cyc(2, {{1, 2}})), signs(2, 0b11)));
  CHECK_THROWS_AS(TorusMonodromy(SignedPerm(SignVector(0b11), cyc(2, {{1, 2}})), SignedPerm(2)),
                  HypothesisViolation);
  CHECK_THROWS_AS(TorusMonodromy(SignedPerm::from_perm(cyc(2, {{1, 2}})), signs(2, 0b01)),
                  NotCommutingError);
  CHECK_THROWS_AS(TorusMonodromy(SignedPerm(2), SignedPerm(3)), DegreeError);
}

TEST_CASE("components examples") {
  {
    const auto cs = components(TorusMonodromy(SignedPerm(3), SignedPerm(3)));
    REQUIRE(cs.size() == 3);
    for (const auto& c : cs) {
      CHECK(c.e == 1);
      CHECK(c.t == 1);
      CHECK(c.d == 0);
    }
  }
  {
    const TorusMonodromy tm(SignedPerm::from_perm(cyc(4, {{1, 2}, {3, 4}})),
                            SignedPerm::from_perm(cyc(4, {{1, 3}, {2, 4}})));
    const auto cs = components(tm);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].e == 2);
    CHECK(cs[0].t == 2);
    CHECK(cs[0].d == 0);
    CHECK(cs[0].indices == std::vector<std::size_t>{0, 1, 2, 3});
  }
  {
    const auto cs = components(TorusMonodromy(SignedPerm::from_perm(cyc(2, {{1, 2}})), signs(2, 0b11)));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].e == 2);
    CHECK(cs[0].t == 1);
    CHECK(cs[0].d == 1);
    CHECK(cs[0].alpha == Z2(1));
  }
}

TEST_CASE("alpha_pairing") {
  const TorusMonodromy zero(SignedPerm::from_perm(cyc(4, {{1, 2}, {3, 4}})),
                            SignedPerm::from_perm(cyc(4, {{1, 3}, {2, 4}})));
  const auto c0 = components(zero).front();
  CHECK(alpha_pairing(zero, c0) == Z2(0));

  const TorusMonodromy one(SignedPerm::from_perm(cyc(2, {{1, 2}})), signs(2, 0b11));
  const auto c1 = components(one).front();
  CHECK(alpha_pairing(one, c1) == Z2(1));
  CHECK(alpha_entry(one, c1, 0) == Z2(1));
  CHECK(alpha_entry(one, c1, 1) == Z2(1));

  const TorusMonodromy split(SignedPerm::from_perm(cyc(3, {{1, 2}})), signs(3, 0b011));
  const auto cs = components(split);
  REQUIRE(cs.size() == 2);
  CHECK_THROWS_AS(alpha_entry(split, cs[0], 2), std::out_of_range);
}

TEST_CASE("alpha equals d mod 2 and does not depend on the point, random n <= 12") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const Permutation sigma = random_permutation(n, rng);
    const TorusMonodromy tm(SignedPerm::from_perm(sigma), centralizer_sample(sigma, rng.next()));
    std::size_t total = 0;
    for (const auto& c : components(tm)) {
      total += c.e * c.t;
      REQUIRE(c.d <= c.t);
      REQUIRE(c.alpha == Z2(c.d));
      for (std::size_t k : c.indices) {
        REQUIRE(alpha_entry(tm, c, k) == c.alpha);
        REQUIRE(entry_sum(tm.longitude(), c.t, k, false) == c.alpha.value());
        REQUIRE(entry_sum(tm.longitude(), c.t, k, true) == c.alpha.value());
      }
    }
    REQUIRE(total == n);
  }
}

TEST_CASE("torus_integral examples") {
  CHECK(torus_integral(TorusMonodromy(SignedPerm(4), signs(4, 0b1011))) == Z2(0));
  CHECK(torus_integral(TorusMonodromy(SignedPerm::from_perm(cyc(2, {{1, 2}})), signs(2, 0b11))) == Z2(1));
  CHECK(torus_integral(TorusMonodromy(SignedPerm::from_perm(cyc(3, {{1, 2, 3}})), signs(3, 0b111))) ==
        Z2(0));
}

TEST_CASE("verify_torus_identity") {
  {
    const auto r = verify_torus_identity(TorusMonodromy(SignedPerm::from_perm(cyc(2, {{1, 2}})), signs(2, 0b11)));
    CHECK(r.lhs == Z2(1));
    CHECK(r.rhs == Z2(1));
    CHECK(r.holds());
  }
  {
    const auto r = verify_torus_identity(TorusMonodromy(SignedPerm(3), SignedPerm::from_perm(cyc(3, {{1, 3}}))));
    CHECK(r.lhs == Z2(0));
    CHECK(r.rhs == Z2(0));
  }
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for_each_permutation(n, [&](const Permutation& sigma) {
      for (const auto& l : centralizer_enumerate(sigma)) {
        const auto r = verify_torus_identity(TorusMonodromy(SignedPerm::from_perm(sigma), l));
        REQUIRE(r.holds());
        ++pairs;
      }
    });
  CHECK(pairs == 2 + 12 + 84 + 816);
}

TEST_CASE("conjugation equivariance") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const Permutation sigma = random_permutation(n, rng);
    const TorusMonodromy tm(SignedPerm::from_perm(sigma), centralizer_sample(sigma, rng.next()));

    // g = (u, π) keeps the meridian in S_n iff u is constant on the cycles
    // of πσπ⁻¹.
    const Permutation pi = random_permutation(n, rng);
    SignVector u;
    for (const auto& c : cycle_decomposition(pi * sigma * pi.inverse()).cycles)
      if (rng.coin())
        for (std::size_t i : c) u.flip(i);
    const SignedPerm g(u, pi);
    const TorusMonodromy moved(conjugate(g, tm.meridian()), conjugate(g, tm.longitude()));

    REQUIRE(torus_integral(moved) == torus_integral(tm));
    REQUIRE(profile(components(moved)) == profile(components(tm)));
    REQUIRE(verify_torus_identity(moved).holds());
  }
}

TEST_CASE("normalize_meridian") {
  SUBCASE("examples") {
    const auto r = normalize_meridian(SignedPerm(SignVector(0b11), cyc(2, {{1, 2}})), signs(2, 0b11));
    CHECK(r.conjugator == signs(2, 0b10));
    CHECK(r.torus.meridian() == SignedPerm::from_perm(cyc(2, {{1, 2}})));
    CHECK_THROWS_AS(normalize_meridian(SignedPerm(SignVector(0b01), cyc(2, {{1, 2}})), SignedPerm(2)),
                    HypothesisViolation);
    CHECK_THROWS_AS(normalize_meridian(signs(3, 0b100), SignedPerm(3)), HypothesisViolation);
    CHECK_THROWS_AS(normalize_meridian(SignedPerm::from_perm(cyc(3, {{1, 2}})), signs(3, 0b001)),
                    NotCommutingError);
  }
  SUBCASE("repair is correct and lexicographically least") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 3000; ++trial) {
      const std::size_t n = 1 + rng.below(16);
      const Permutation sigma = random_permutation(n, rng);
      const TorusMonodromy base(SignedPerm::from_perm(sigma), centralizer_sample(sigma, rng.next()));
      const SignedPerm h = SignedPerm::from_signs(n, SignVector(rng.next() & SignVector::ones(n).bits()));
      const SignedPerm m = conjugate(h, base.meridian());
      const SignedPerm l = conjugate(h, base.longitude());

      const auto r = normalize_meridian(m, l);
      REQUIRE(r.torus.meridian().signs().is_zero());
      REQUIRE(r.torus.meridian().perm() == sigma);
      REQUIRE(is_commuting(r.torus.meridian(), r.torus.longitude()));
      REQUIRE(r.torus.longitude() == conjugate(r.conjugator, l));
      for (const auto& c : cycle_decomposition(sigma).cycles) REQUIRE_FALSE(r.conjugator.signs().test(c.front()));
      REQUIRE(verify_torus_identity(r.torus).holds());
    }
  }
}

TEST_CASE("branch_divisor_pairing") {
  CHECK(branch_divisor_pairing({}).divisor_pairing == Z2(0));
  const TorusMonodromy tm(SignedPerm::from_perm(cyc(2, {{1, 2}})), signs(2, 0b11));
  const auto one = branch_divisor_pairing({tm});
  CHECK(one.divisor_pairing == Z2(1));
  CHECK(one.integral_sum == Z2(1));
  const auto two = branch_divisor_pairing({tm, tm});
  CHECK(two.divisor_pairing == Z2(0));
  CHECK(two.integral_sum == Z2(0));
  CHECK(two.tori.size() == 2);
}

TEST_CASE("parse_cover") {
  SUBCASE("minimal file") {
    const auto cp = parse_cover("n 1\ngen a = cycles:(); signs:0\n");
    CHECK(cp.degree == 1);
    CHECK(cp.generators.size() == 1);
    CHECK(cp.relators.empty());
    CHECK(cp.tori.empty());
  }
  SUBCASE("words and comments") {
    const auto cp = parse_cover(
        "# header\n"
        "n 3   # degree\n"
        "\n"
        "gen a = cycles:(1 2 3); signs:000\n"
        "gen b_2 = cycles:(1 2); signs:110\n"
        "rel a a a\n"
        "torus a | b_2' a\n");
    REQUIRE(cp.relators.size() == 1);
    CHECK(cp.relators[0].line == 6);
    CHECK(cp.relators[0].letters.size() == 3);
    REQUIRE(cp.tori.size() == 1);
    CHECK(cp.tori[0].longitude.letters[0].generator == 1);
    CHECK(cp.tori[0].longitude.letters[0].inverse);
    CHECK(cp.tori[0].longitude.text == "b_2' a");
    CHECK(evaluate(cp, cp.relators[0]).is_identity());
  }
  SUBCASE("errors carry line and column") {
    const auto error_at = [](const std::string& text) {
      try {
        parse_cover(text);
      } catch (const ParseError& e) {
        return std::pair{e.line(), e.column()};
      }
      FAIL("expected ParseError");
      return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(error_at("n 2\ngen a = cycles:(1 2); signs:000\n") == std::pair<std::size_t, std::size_t>{2, 29});
    CHECK(error_at("n 2\ngen a = cycles:(1 2); signs:00\nrel a c\n") == std::pair<std::size_t, std::size_t>{3, 7});
    CHECK(error_at("gen a = cycles:(); signs:00\n").first == 1);
    CHECK(error_at("n 2\nn 2\n").first == 2);
    CHECK(error_at("n 2\ngen a = cycles:(); signs:00\ngen a = cycles:(); signs:00\n").first == 3);
    CHECK(error_at("n 2\ngen a = cycles:(); signs:00\ntorus a a\n").first == 3);
    CHECK(error_at("n 2\ngen a = cycles:(); signs:00\ntorus a | a | a\n").first == 3);
    CHECK(error_at("n 2\ngen a = cycles:(); signs:00\nrel\n").first == 3);
    CHECK(error_at("n 2\nfoo\n").first == 2);
    CHECK(error_at("n 0\n").first == 1);
    CHECK(error_at("n 65\n").first == 1);
    CHECK(error_at("# nothing\n").first >= 1);
    CHECK(error_at("n 2\ngen 1a = cycles:(); signs:00\n").first == 2);
    CHECK(error_at("n 2\ngen a cycles:(); signs:00\n").first == 2);
  }
}

TEST_CASE("check_cover on bundled fixtures") {
  SUBCASE("trivial double cover passes") {
    const auto report = check_cover(parse_cover(fixture("trivial_double_cover.cover")));
    CHECK(report.exit_code() == 0);
    CHECK(report.global.divisor_pairing == Z2(0));
    CHECK(report.global.integral_sum == Z2(0));
    for (const auto& c : report.checks) CHECK(c.status == CheckStatus::Pass);
  }
  SUBCASE("bad relator is named") {
    const auto report = check_cover(parse_cover(fixture("bad_relator.cover")));
    CHECK(report.exit_code() == 2);
    const auto bad = std::find_if(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& c) { return c.status != CheckStatus::Pass; });
    REQUIRE(bad != report.checks.end());
    CHECK(bad->name == "relator 2");
    CHECK(bad->status == CheckStatus::Violation);
  }
  SUBCASE("branched meridian violates the hypothesis") {
    const auto report = check_cover(parse_cover(fixture("branched_meridian.cover")));
    CHECK(report.exit_code() == 2);
    const auto bad = std::find_if(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& c) { return c.status != CheckStatus::Pass; });
    REQUIRE(bad != report.checks.end());
    CHECK(bad->name == "torus 1 meridian");
    CHECK(bad->detail.find("hypothesis violated") != std::string::npos);
  }
  SUBCASE("cancelling tori") {
    const auto report = check_cover(parse_cover(fixture("cancelling_tori.cover")));
    CHECK(report.exit_code() == 0);
    REQUIRE(report.global.tori.size() == 2);
    CHECK(report.global.tori[0].lhs == Z2(1));
    CHECK(report.global.tori[1].lhs == Z2(1));
  }
  SUBCASE("an open collection fails the global sum") {
    const auto report = check_cover(parse_cover(fixture("open_torus.cover")));
    CHECK(report.exit_code() == 3);
    CHECK(report.global.integral_sum == Z2(1));
    CHECK(report.global.divisor_pairing == Z2(1));
  }
  SUBCASE("non-commuting torus") {
    const auto report = check_cover(parse_cover(
        "n 3\ngen a = cycles:(1 2); signs:000\ngen b = cycles:(2 3); signs:000\ntorus a | b\n"));
    CHECK(report.exit_code() == 2);
    CHECK(report.checks.front().name == "torus 1 commute");
    CHECK(report.checks.front().status == CheckStatus::Violation);
  }
}

}  // TEST_SUITE
