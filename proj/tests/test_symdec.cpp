#include <doctest.h>

#include "apolar/construct.hpp"
#include "support.hpp"

using namespace apolar;
using support::audit;
using support::D;
using support::ideal;

namespace {

SymDecomp decomp(int s, std::initializer_list<std::pair<int, std::vector<int>>> rows) {
  SymDecomp d(s);
  for (const auto& [a, v] : rows) d.add(a, v);
  return d;
}

std::vector<int> ones(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi + 1), 0);
  for (int i = lo; i <= hi; ++i) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace

TEST_SUITE("symdec") {
  TEST_CASE("decomposition container") {
    SymDecomp d = decomp(4, {{0, {1, 2, 3, 2, 1}}, {2, {0, 1}}});
    CHECK(d.to_string() == "0:(1,2,3,2,1), 2:(0,1)");
    CHECK(d.total() == HSeq{1, 3, 3, 2, 1});
    CHECK(d.is_symmetric());
    d.add(2, {0, -1});
    CHECK(d.rows().size() == 1);
    CHECK_FALSE(decomp(4, {{1, {0, 1, 1, 0}}, {0, {1, 1}}}).is_symmetric());
  }

  TEST_CASE("decompositions of the worked examples") {
    CHECK(audit()(annihilator(D("X^2Y^2 + Z^2"))) == decomp(4, {{0, {1, 2, 3, 2, 1}}, {2, {0, 1}}}));
    CHECK(audit()(annihilator(D("X^4 + Y^4 + Z^3 + XYZ"))) == decomp(4, {{0, {1, 2, 2, 2, 1}}, {1, {0, 1, 1}}}));
    CHECK(audit()(ideal("xz; yz + x^4; z^2 + y^3")) == decomp(6, {{0, {1, 2, 3, 3, 3, 2, 1}}, {2, {0, 1, 0, 1}}}));
    CHECK(audit()(annihilator(D("X^3Y^3 + Z^2"))) == decomp(6, {{0, {1, 2, 3, 4, 3, 2, 1}}, {4, {0, 1}}}));
    CHECK(audit()(ideal("x^2; y^2; z^2")) == decomp(3, {{0, {1, 3, 3, 1}}}));
    CHECK_THROWS_AS(symmetric_decomposition(ideal("xz; yz; z^2 - y^3; x^4")), NotGorenstein);
  }

  TEST_CASE("codimension two decompositions") {
    CHECK(codim2_unique_decomposition(HSeq{1, 2, 3, 2, 1}) == decomp(4, {{0, {1, 2, 3, 2, 1}}}));

    SymDecomp b = codim2_unique_decomposition(HSeq{1, 2, 1, 1, 1});
    CHECK(b == decomp(4, {{0, ones(0, 4)}, {2, {0, 1}}}));
    CHECK(audit()(annihilator(codim2_dual_from_h(HSeq{1, 2, 1, 1, 1}).form)) == b);

    SymDecomp c = codim2_unique_decomposition(HSeq{1, 2, 3, 2, 1, 1});
    CHECK(c == decomp(5, {{0, ones(0, 5)}, {1, {0, 1, 2, 1}}}));
    CHECK(audit()(annihilator(codim2_dual_from_h(HSeq{1, 2, 3, 2, 1, 1}).form)) == c);

    for (const auto& h : {HSeq{1, 2, 3, 3, 2, 1}, HSeq{1, 2, 2, 2, 1, 1, 1}, HSeq{1, 2, 3, 4, 3, 3, 2, 1},
                          HSeq{1, 2, 3, 3, 3, 2, 2, 1}}) {
      CAPTURE(h.to_string());
      CHECK(audit()(annihilator(codim2_dual_from_h(h).form)) == codim2_unique_decomposition(h));
    }
  }

  TEST_CASE("predictions for h_3 <= 3") {
    Prediction a = predicted_typeI(0, 1, 0);
    CHECK(a.ci == decomp(4, {{0, {1, 2, 2, 2, 1}}, {1, {0, 1, 1}}}));
    REQUIRE(a.other);
    CHECK(*a.other == decomp(4, {{0, {1, 2, 3, 2, 1}}, {2, {0, 1}}}));

    Prediction b = predicted_typeI(0, 0, 0);
    CHECK(b.ci == decomp(3, {{0, {1, 3, 3, 1}}}));
    CHECK_FALSE(b.other);

    Prediction c = predicted_typeI(1, 0, 0);
    CHECK(c.ci == audit()(construct_h3le3(1, 0, 0)));
    CHECK(c.ci == decomp(4, {{0, {1, 3, 3, 3, 1}}}));
    CHECK_FALSE(c.other);

    CHECK_THROWS_AS(predicted_typeI(0, -1, 0), PreconditionFailed);
  }

  TEST_CASE("predictions for (1,3,3,4) sequences") {
    Prediction a = predicted_type1334(HSeq{1, 3, 3, 4, 3, 2, 1});
    CHECK(a.ci == decomp(6, {{0, {1, 2, 3, 3, 3, 2, 1}}, {2, {0, 1, 0, 1}}}));
    // Delta(h) = 1 here, and the second decomposition is the one realized by X^3Y^3 + Z^2.
    REQUIRE(a.other);
    CHECK(*a.other == decomp(6, {{0, {1, 2, 3, 4, 3, 2, 1}}, {4, {0, 1}}}));
    CHECK(*a.other == audit()(annihilator(D("X^3Y^3 + Z^2"))));

    HSeq h2{1, 3, 3, 4, 4, 3, 2, 1};
    Prediction b = predicted_type1334(h2);
    REQUIRE(b.other);
    CHECK(b.ci == audit()(construct_ci(h2)));
    Ideal W = annihilator(non_ci_witness(h2));
    CHECK(*b.other == audit()(W));
    CHECK(W.hilbert_function() == h2);
    CHECK(minimal_generator_count(W) >= 4);

    HSeq h3{1, 3, 3, 4, 2, 1};
    Prediction c = predicted_type1334(h3);
    CHECK_FALSE(c.other);
    CHECK(c.ci == audit()(construct_ci(h3)));
    CHECK(c.ci == decomp(5, {{0, {1, 2, 3, 3, 2, 1}}, {1, {0, 1, 0, 1}}}));

    CHECK_THROWS_AS(predicted_type1334(HSeq{1, 3, 3, 2, 1}), Rejected);
    CHECK_THROWS_AS(predicted_decomposition(HSeq{1, 3, 3, 4, 3, 1}), Rejected);
  }

  TEST_CASE("the graded piece of the top form") {
    CHECK(check_q0(annihilator(D("X^2Y^2 + Z^2"))));
    CHECK(check_q0(ideal("x^2; y^2; z^2")));
    CHECK(check_q0(ideal("xz; yz + x^3; z^2 + y^3")));
    Ideal I = ideal("xz; yz + x^3; z^2 + y^3");
    DualPoly F = dual_generator(I);
    CHECK(oracle::apolar_hf(F.homogeneous_part(F.degree())).values() == audit()(I).row(0));
  }

  TEST_CASE("partial sums of rows are O-sequences") {
    for (const char* text : {"xz; yz + x^4; z^2 + y^3", "xz; yz + x^3; z^2 + y^3", "yz - x^5; xz - y^4; xy - z^3"}) {
      SymDecomp d = audit()(ideal(text));
      std::vector<int> partial;
      for (const auto& [a, row] : d.rows()) {
        if (partial.size() < row.size()) partial.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) partial[i] += row[i];
        CHECK(is_o_sequence(HSeq(partial)));
      }
    }
  }

  TEST_CASE("every decomposition computed in this suite is symmetric and adds up to h") {
    CHECK(audit().result.cases > 10);
    CHECK_MESSAGE(audit().result.failures == 0, audit().result.first_failure);
  }
}
