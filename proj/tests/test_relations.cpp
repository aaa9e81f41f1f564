#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mgrough/errors.hpp"
#include "mgrough/partitions.hpp"
#include "mgrough/text_format.hpp"

using namespace mgrough;
using testing_support::eq;
using testing_support::matrix;

namespace {

const Universe abc = letters_universe(3);
const Universe abcd = letters_universe(4);
const Universe abcde = letters_universe(5);
const Universe nums({"1", "2", "3", "4"});

}  // namespace

TEST_SUITE("universe") {
  TEST_CASE("labels must be distinct and nonempty") {
    CHECK_THROWS_AS(Universe({"a", "a"}), InvalidRelation);
    CHECK_THROWS_AS(Universe({""}), InvalidRelation);
    CHECK(Universe(std::vector<std::string>{}).size() == 0);
  }

  TEST_CASE("compact set rendering round-trips") {
    CHECK(abc.format(abc.empty_set()) == "-");
    CHECK(abc.format(abc.full_set()) == "abc");
    CHECK(abc.format(Subset::of(abc.size(), {0, 2})) == "ac");
    CHECK(abc.parse_set("ca") == Subset::of(abc.size(), {0, 2}));
    CHECK(abc.parse_set("-") == abc.empty_set());
    CHECK(nums.format(Subset::of(nums.size(), {1, 2})) == "23");
    const Universe wide({"x1", "x2", "x3"});
    CHECK(wide.format(Subset::of(3, {1, 2})) == "x2,x3");
    CHECK(wide.parse_set("x2,x3") == Subset::of(3, {1, 2}));
    CHECK_THROWS(abc.parse_set("az"));
  }

  TEST_CASE("subset algebra stays inside one universe") {
    const auto x = Subset::of(abc.size(), {0});
    const auto y = Subset::of(abc.size(), {0, 1});
    CHECK(x.is_proper_subset_of(y));
    CHECK((y - x) == Subset::of(abc.size(), {1}));
    CHECK(x.complement() == Subset::of(abc.size(), {1, 2}));
    CHECK_THROWS_AS((void)(x | Subset::of(abcd.size(), {0})), UniverseMismatch);
  }

  TEST_CASE("subset enumeration visits every subset once in numeric order") {
    std::vector<std::uint64_t> seen;
    for_each_subset(4, [&](const Subset& s) { seen.push_back(s.bits()); });
    REQUIRE(seen.size() == 16);
    for (std::uint64_t i = 0; i < 16; ++i) CHECK(seen[i] == i);
    std::size_t empty_count = 0;
    for_each_subset(0, [&](const Subset& s) { empty_count += s.is_empty(); });
    CHECK(empty_count == 1);
  }
}

TEST_SUITE("relations") {
  TEST_CASE("equivalences validate their classes") {
    CHECK_THROWS_AS(Equivalence::from_classes(abc, {Subset::of(abc.size(), {0, 1})}), InvalidRelation);
    CHECK_THROWS_AS(Equivalence::from_classes(abc, {Subset::of(abc.size(), {0, 1}), Subset::of(abc.size(), {1, 2})}),
                    InvalidRelation);
    const auto p = eq(abc, "ab|c");
    CHECK(p.relates(0, 1));
    CHECK_FALSE(p.relates(1, 2));
    CHECK(p.class_of(1) == Subset::of(abc.size(), {0, 1}));
  }

  TEST_CASE("tolerances must be reflexive and symmetric") {
    CHECK_THROWS_AS(Tolerance(Relation(abc, {Subset::of(abc.size(), {0}), abc.empty_set(), Subset::of(abc.size(), {2})})),
                    InvalidRelation);
    CHECK_THROWS_AS(Tolerance(Relation(abc, {Subset::of(abc.size(), {0, 1}), Subset::of(abc.size(), {1}), Subset::of(abc.size(), {2})})),
                    InvalidRelation);
  }

  TEST_CASE("neighbourhoods") {
    const auto uni = rel_union(eq(abc, "ab|c"), eq(abc, "a|bc"));
    CHECK(neighborhood(uni, 1) == abc.full_set());
    const auto id = Tolerance::identity(abc);
    for (std::size_t x = 0; x < 3; ++x) CHECK(neighborhood(id, x) == Subset::of(abc.size(), {x}));
    CHECK_THROWS(neighborhood(id, 3));
  }

  TEST_CASE("neighbourhood equals a row scan of the matrix on random tolerances") {
    std::mt19937_64 rng(kDefaultSeed);
    const auto u = letters_universe(6);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = random_tolerance(u, rng);
      const auto m = matrix(t);
      for (int x = 0; x < 6; ++x) {
        CHECK(neighborhood(t, x).bits() == oracle::row(m, x));
        CHECK(neighborhood(t, x).contains(x));
      }
    }
  }

  TEST_CASE("union of the coherent pair is the expected equivalence") {
    const auto p = eq(abcde, "ae|b|c|d");
    const auto q = eq(abcde, "a|bc|d|e");
    const auto uni = rel_union(p, q);
    CHECK(uni.relation().is_transitive());
    CHECK(Equivalence::from_labels(abcde, std::vector<std::size_t>{0, 1, 1, 2, 0}).as_relation() ==
          uni.relation());
    CHECK(rel_union(p, p).relation() == p.as_relation());
  }

  TEST_CASE("union of crossing partitions on four elements") {
    const auto uni = rel_union(eq(abcd, "ab|cd"), eq(abcd, "ad|bc"));
    CHECK(uni.relates(0, 1));
    CHECK(uni.relates(1, 2));
    CHECK(uni.relates(2, 3));
    CHECK(uni.relates(0, 3));
    CHECK_FALSE(uni.relates(0, 2));
    CHECK_FALSE(uni.relates(1, 3));
  }

  TEST_CASE("intersection") {
    CHECK(rel_intersection(eq(abc, "ab|c"), eq(abc, "a|bc")) == Equivalence::identity(abc));
    CHECK(rel_intersection(eq(abc, "ab|c"), eq(abc, "ab|c")) == eq(abc, "ab|c"));
    CHECK(rel_intersection(eq(abcde, "ae|b|c|d"), eq(abcde, "a|bc|d|e")) ==
          Equivalence::identity(abcde));
  }

  TEST_CASE("composition against a triple-loop oracle") {
    const auto p = eq(abc, "ab|c");
    const auto q = eq(abc, "a|bc");
    const auto comp = rel_compose(p, q);
    CHECK(comp.relates(0, 2));  // a P b Q c
    CHECK_FALSE(rel_union(p, q).relates(0, 2));
    CHECK(rel_compose(Equivalence::identity(abc), q) == q.as_relation());
    const auto coherent_p = eq(abcde, "ae|b|c|d");
    const auto coherent_q = eq(abcde, "a|bc|d|e");
    CHECK(rel_compose(coherent_p, coherent_q) == rel_union(coherent_p, coherent_q).relation());

    for (std::size_t n = 0; n <= 4; ++n) {
      const auto parts = all_partitions(letters_universe(n));
      for (const auto& a : parts) {
        for (const auto& b : parts) {
          const auto expected = oracle::compose(matrix(a), matrix(b));
          const auto got = rel_compose(a, b);
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) REQUIRE(got.relates(x, y) == expected[x][y]);
          }
        }
      }
    }
  }

  TEST_CASE("coherence examples") {
    CHECK(is_coherent(eq(abcde, "ae|b|c|d"), eq(abcde, "a|bc|d|e")));
    CHECK_FALSE(is_coherent(eq(abc, "ab|c"), eq(abc, "a|bc")));
    CHECK(is_coherent(eq(abc, "ab|c"), eq(abc, "ab|c")));
    const auto t = coherence_triple_check(eq(abc, "ab|c"), eq(abc, "a|bc"));
    CHECK_FALSE(t.coherent);
    CHECK_FALSE(t.union_is_transitive);
    CHECK_FALSE(t.union_equals_composition);
  }

  TEST_CASE("three coherence characterizations agree on every pair up to n = 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto parts = all_partitions(letters_universe(n));
      for (const auto& p : parts) {
        for (const auto& q : parts) {
          const auto t = coherence_triple_check(p, q);
          const auto pm = matrix(p);
          const auto qm = matrix(q);
          const auto um = oracle::unite(pm, qm);
          // Oracle for each characterization, computed independently.
          bool comparable = true;
          for (std::size_t x = 0; x < n; ++x) {
            const auto a = oracle::row(pm, x);
            const auto b = oracle::row(qm, x);
            comparable &= oracle::subset(a, b) || oracle::subset(b, a);
          }
          REQUIRE(t.coherent == comparable);
          REQUIRE(t.union_is_transitive == oracle::is_transitive(um));
          REQUIRE(t.union_equals_composition == (oracle::compose(pm, qm) == um));
          REQUIRE(t.coherent == t.union_is_transitive);
          REQUIRE(t.coherent == t.union_equals_composition);
        }
      }
    }
  }

  TEST_CASE("three-way split examples") {
    auto s = partition_u123(eq(abc, "ab|c"), eq(abc, "a|bc"));
    CHECK(s.u1 == Subset::of(abc.size(), {0}));
    CHECK(s.u2 == Subset::of(abc.size(), {2}));
    CHECK(s.u3 == Subset::of(abc.size(), {1}));
    s = partition_u123(eq(abcd, "ab|cd"), eq(abcd, "ad|bc"));
    CHECK(s.u1.is_empty());
    CHECK(s.u2.is_empty());
    CHECK(s.u3.is_full());
    s = partition_u123(eq(abc, "ab|c"), eq(abc, "ab|c"));
    CHECK(s.u1.is_full());
    s = partition_u123(eq(abcde, "ae|b|c|d"), eq(abcde, "a|bc|d|e"));
    CHECK(s.u1 == abcde.parse_set("ade"));
    CHECK(s.u2 == abcde.parse_set("bc"));
    CHECK(s.u3.is_empty());
  }

  TEST_CASE("H family examples") {
    auto h = covering_h(eq(abc, "ab|c"), eq(abc, "a|bc"));
    CHECK(h.members() == std::vector<Subset>{abc.parse_set("ab"), abc.parse_set("bc")});
    CHECK(h.covers_universe());
    CHECK(h_induces_union(eq(abc, "ab|c"), eq(abc, "a|bc")));

    h = covering_h(eq(abcd, "ab|cd"), eq(abcd, "ad|bc"));
    CHECK(h.empty());
    CHECK_FALSE(h.covers_universe());
    CHECK_FALSE(h_induces_union(eq(abcd, "ab|cd"), eq(abcd, "ad|bc")));

    const auto p = eq(abcd, "a|bc|d");
    const auto q = eq(abcd, "ab|cd");
    const auto s = partition_u123(p, q);
    CHECK(s.u1.is_empty());
    CHECK(s.u2 == abcd.parse_set("ad"));
    h = covering_h(p, q);
    CHECK(h.members() == std::vector<Subset>{abcd.parse_set("ab"), abcd.parse_set("cd")});
    CHECK_FALSE(h_induces_union(p, q));
    const auto induced = induced_tolerance(h);
    CHECK_FALSE(induced.relates(1, 2));
    CHECK(rel_union(p, q).relates(1, 2));
  }

  TEST_CASE("induced tolerance") {
    const Covering c(abc, {abc.parse_set("ab"), abc.parse_set("bc")});
    const auto t = induced_tolerance(c);
    CHECK(t.relates(0, 1));
    CHECK(t.relates(1, 2));
    CHECK_FALSE(t.relates(0, 2));
    const Covering singletons(abc, {abc.parse_set("a"), abc.parse_set("b"), abc.parse_set("c")});
    CHECK(induced_tolerance(singletons) == Tolerance::identity(abc));
    CHECK_THROWS_AS(induced_tolerance(Covering(abc, {abc.parse_set("ab")})), InvalidRelation);
    CHECK_THROWS(Covering(abc, {abc.empty_set()}));
  }

  TEST_CASE("blocks and preblocks") {
    const auto uni = rel_union(eq(abc, "ab|c"), eq(abc, "a|bc"));
    CHECK(is_block(uni, abc.parse_set("ab")));
    CHECK_FALSE(is_preblock(uni, abc.full_set()));
    CHECK(is_block(Tolerance::identity(abc), abc.parse_set("b")));
    CHECK_FALSE(is_block(uni, abc.parse_set("a")));
    CHECK_THROWS_AS(is_preblock(uni, abc.empty_set()), std::invalid_argument);
  }

  TEST_CASE("a neighbourhood is a block exactly when it is a preblock, on all tolerances up to n = 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& t : all_tolerances(letters_universe(n))) {
        const auto m = matrix(t);
        for (std::size_t x = 0; x < n; ++x) {
          const auto nb = neighborhood(t, x);
          // Oracle: clique test and one-element extension test on the matrix.
          bool clique = true;
          for (auto a : nb.elements()) {
            for (auto b : nb.elements()) clique &= m[a][b];
          }
          bool maximal = clique;
          for (std::size_t z = 0; z < n && maximal; ++z) {
            if (nb.contains(z)) continue;
            bool joins = true;
            for (auto a : nb.elements()) joins &= m[a][z];
            if (joins) maximal = false;
          }
          REQUIRE(is_preblock(t, nb) == clique);
          REQUIRE(is_block(t, nb) == maximal);
          REQUIRE(is_block(t, nb) == is_preblock(t, nb));
        }
      }
    }
  }

  TEST_CASE("tolerance induced by H is inside the union, on every pair up to n = 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto u = letters_universe(n);
      const auto parts = all_partitions(u);
      for (const auto& p : parts) {
        for (const auto& q : parts) {
          const auto h = covering_h(p, q);
          REQUIRE(induced_relation(u, h.members()).is_subset_of(rel_union(p, q).relation()));
          const auto s = partition_u123(p, q);
          REQUIRE_FALSE(s.u1.intersects(s.u2));
          REQUIRE_FALSE(s.u1.intersects(s.u3));
          REQUIRE_FALSE(s.u2.intersects(s.u3));
          REQUIRE((s.u1 | s.u2 | s.u3).is_full());
          if (is_coherent(p, q)) {
            REQUIRE(s.u3.is_empty());
            REQUIRE(h_induces_union(p, q));
          }
        }
      }
    }
  }

  TEST_CASE("smallest equivalence") {
    const auto uni = rel_union(eq(abc, "ab|c"), eq(abc, "a|bc"));
    CHECK(smallest_equivalence(uni) == Equivalence::total(abc));
    CHECK(smallest_equivalence(eq(abc, "ab|c").as_tolerance()) == eq(abc, "ab|c"));
    const auto two = Tolerance::from_edges(abcd, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}});
    CHECK(smallest_equivalence(two).classes().size() == 2);

    std::mt19937_64 rng(kDefaultSeed + 1);
    const auto u = letters_universe(6);
    for (int trial = 0; trial < 100; ++trial) {
      const auto t = random_tolerance(u, rng, 25);
      const auto closure = oracle::transitive_closure(matrix(t));
      const auto e = smallest_equivalence(t);
      const auto comp = oracle::components(matrix(t));
      for (std::size_t x = 0; x < 6; ++x) {
        for (std::size_t y = 0; y < 6; ++y) {
          REQUIRE(e.relates(x, y) == closure[x][y]);
          REQUIRE(e.relates(x, y) == (comp[x] == comp[y]));
          if (t.relates(x, y)) REQUIRE(e.relates(x, y));
        }
      }
    }
  }

  TEST_CASE("condition (C)") {
    CHECK(condition_c(eq(nums, "123|4"), eq(nums, "1|234")));
    CHECK_FALSE(is_coherent(eq(nums, "123|4"), eq(nums, "1|234")));
    CHECK_FALSE(condition_c(eq(abc, "ab|c"), eq(abc, "a|bc")));
    CHECK(condition_c(Equivalence::identity(abc), Equivalence::identity(abc)));
  }

  TEST_CASE("singleton classes") {
    CHECK(sigma_classes(eq(nums, "123|4")) == nums.parse_set("4"));
    CHECK(sigma_classes(Equivalence::identity(abc)).is_full());
    CHECK(sigma_classes(Equivalence::total(abc)).is_empty());
  }

  TEST_CASE("irredundant covering test agrees with H inducing the union") {
    CHECK(induced_by_irredundant_covering(rel_union(eq(abc, "ab|c"), eq(abc, "a|bc"))));
    CHECK_FALSE(induced_by_irredundant_covering(rel_union(eq(abcd, "ab|cd"), eq(abcd, "ad|bc"))));
    CHECK_FALSE(induced_by_irredundant_covering(rel_union(eq(abcd, "a|bc|d"), eq(abcd, "ab|cd"))));
  }

  TEST_CASE("degenerate empty universe") {
    const Universe empty{std::vector<std::string>{}};
    const auto e = Equivalence::identity(empty);
    CHECK(e.classes().empty());
    CHECK(is_coherent(e, e));
    CHECK(condition_c(e, e));
    CHECK(h_induces_union(e, e));
    CHECK(partition_u123(e, e).u1.is_empty());
  }

  TEST_CASE("universe mismatch is reported") {
    CHECK_THROWS_AS(rel_union(eq(abc, "ab|c"), Equivalence::identity(abcd)), UniverseMismatch);
    CHECK_THROWS_AS(is_coherent(eq(abc, "ab|c"), Equivalence::identity(abcd)), UniverseMismatch);
  }
}

TEST_SUITE("partitions") {
  TEST_CASE("restricted growth strings count the Bell numbers in lexicographic order") {
    for (std::size_t n = 0; n <= 7; ++n) {
      const auto all = restricted_growth_strings(n);
      REQUIRE(all.size() == oracle::kBell[n]);
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& s : all) {
        std::size_t mx = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          REQUIRE(s[i] <= (i == 0 ? 0 : mx + 1));
          mx = std::max(mx, s[i]);
        }
      }
    }
    CHECK(restricted_growth_strings(3) == std::vector<std::vector<std::size_t>>{
                                              {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  }

  TEST_CASE("all tolerances are distinct") {
    const auto ts = all_tolerances(letters_universe(4));
    CHECK(ts.size() == 64);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = i + 1; j < ts.size(); ++j) REQUIRE_FALSE(ts[i] == ts[j]);
    }
  }

  TEST_CASE("random generators are reproducible for a seed") {
    const auto u = letters_universe(6);
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 20; ++i) {
      CHECK(random_partition(u, a) == random_partition(u, b));
      CHECK(random_subset(6, a) == random_subset(6, b));
    }
  }
}

TEST_SUITE("text format") {
  TEST_CASE("parses universes, partitions and tolerances") {
    const auto f = parse_relation_file(
        "# comment\n"
        "universe: a b c\n"
        "\n"
        "partition P: a b | c   # trailing comment\n"
        "partition Q: a | b c\n"
        "tolerance T: a-b b-c\n");
    CHECK(f.universe.size() == 3);
    CHECK(f.partitions.size() == 2);
    CHECK(f.partition("P") == eq(f.universe, "ab|c"));
    CHECK(f.partition("Q") == eq(f.universe, "a|bc"));
    CHECK(f.tolerance("T").relates(0, 1));
    CHECK_FALSE(f.tolerance("T").relates(0, 2));
    CHECK(parse_relation_file(format_relation_file(f)).partition("P") == f.partition("P"));
  }

  TEST_CASE("errors carry line and column") {
    auto expect_error = [](const std::string& text, std::size_t line) {
      try {
        parse_relation_file(text);
        FAIL("no error for: " << text);
      } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() >= 1);
      }
    };
    expect_error("partition P: a | b\n", 1);
    expect_error("universe: a b\npartition P: a\n", 2);
    expect_error("universe: a b\npartition P: a | a b\n", 2);
    expect_error("universe: a b\nrelation R: a\n", 2);
    expect_error("universe: a b\ntolerance T: a-z\n", 2);
    expect_error("universe: a b\n: a b\n", 2);
    expect_error("universe: a a\n", 1);
  }
}
