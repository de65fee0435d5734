#include <doctest.h>

#include "omega4/classify.hpp"
#include "omega4/quiver.hpp"

using namespace omega4;

namespace {

Quiver two_cycle() {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {Arrow{"alpha", 1, 2}, Arrow{"beta", 2, 1}};
  return q;
}

Quiver loop_two_cycle() {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {Arrow{"rho", 1, 1}, Arrow{"alpha", 1, 2}, Arrow{"beta", 2, 1}};
  return q;
}

Quiver a2() {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {Arrow{"a", 1, 2}};
  return q;
}

}  // namespace

TEST_CASE("in/out arrows with loops counted on both sides") {
  Quiver q = loop_two_cycle();
  CHECK(q.out_arrows(1) == std::vector<int>{0, 1});  // rho, alpha
  CHECK(q.in_arrows(1) == std::vector<int>{0, 2});   // rho, beta
  CHECK(q.out_arrows(2) == std::vector<int>{2});
  CHECK(q.in_arrows(2) == std::vector<int>{1});

  Quiver single;
  single.num_vertices = 1;
  CHECK(single.out_arrows(1).empty());
  CHECK(single.in_arrows(1).empty());
  CHECK_THROWS_AS(single.out_arrows(2), Error);
}

TEST_CASE("arrow count bookkeeping") {
  for (const Quiver& q : {two_cycle(), loop_two_cycle(), a2()}) {
    size_t ins = 0, outs = 0;
    for (int v = 1; v <= q.num_vertices; ++v) {
      ins += q.in_arrows(v).size();
      outs += q.out_arrows(v).size();
    }
    CHECK(ins == q.arrows.size());
    CHECK(outs == q.arrows.size());
    for (size_t k = 0; k < q.arrows.size(); ++k) {
      auto out = q.out_arrows(q.arrows[k].src);
      auto in = q.in_arrows(q.arrows[k].dst);
      CHECK(std::find(out.begin(), out.end(), static_cast<int>(k)) != out.end());
      CHECK(std::find(in.begin(), in.end(), static_cast<int>(k)) != in.end());
    }
  }
}

TEST_CASE("condition (b) witnesses") {
  // two-cycle: alpha: 1->2 qualifies, out(1) = {alpha} = in(2)
  auto w = two_cycle().condition_b_arrow();
  REQUIRE(w.has_value());
  CHECK(two_cycle().arrows[*w].name == "alpha");

  // loop+cycle: out(1) = {rho, alpha}, in(1) = {rho, beta}: nothing qualifies
  CHECK(!loop_two_cycle().condition_b_arrow().has_value());

  // a single loop qualifies with i = j
  Quiver loop;
  loop.num_vertices = 1;
  loop.arrows = {Arrow{"rho", 1, 1}};
  auto wl = loop.condition_b_arrow();
  REQUIRE(wl.has_value());
  CHECK(*wl == 0);
}

TEST_CASE("condition (b) implies singleton arrow sets") {
  for (const Quiver& q : {two_cycle(), loop_two_cycle(), a2()}) {
    auto w = q.condition_b_arrow();
    if (w) {
      CHECK(q.out_arrows(q.arrows[*w].src).size() == 1);
      CHECK(q.in_arrows(q.arrows[*w].dst).size() == 1);
    }
  }
}

TEST_CASE("sinks, sources, connectivity") {
  CHECK(a2().has_sink_or_source());
  CHECK(!two_cycle().has_sink_or_source());
  CHECK(!loop_two_cycle().has_sink_or_source());

  Quiver single;
  single.num_vertices = 1;
  CHECK(single.is_connected());

  Quiver two_isolated;
  two_isolated.num_vertices = 2;
  CHECK(!two_isolated.is_connected());

  CHECK(two_cycle().is_connected());
}

TEST_CASE("path composition respects endpoints and associativity") {
  Quiver q = loop_two_cycle();
  Path rho = Path::of_arrows(q, {0});
  Path alpha = Path::of_arrows(q, {1});
  Path beta = Path::of_arrows(q, {2});
  Path ra = compose(q, rho, alpha);
  CHECK(ra.src == 1);
  CHECK(ra.dst == 2);
  CHECK(ra.length() == 2);
  CHECK_THROWS_AS(compose(q, alpha, alpha), Error);

  Path left = compose(q, compose(q, rho, alpha), beta);
  Path right = compose(q, rho, compose(q, alpha, beta));
  CHECK(left == right);

  Path ab = compose(q, alpha, beta);
  Path rot = rotate_path(q, ab, 1);
  CHECK(rot == compose(q, beta, alpha));
  CHECK_THROWS_AS(rotate_path(q, alpha, 1), Error);
}

TEST_CASE("relation validation") {
  Quiver q = loop_two_cycle();
  PrimeField f(3);
  Path ra = Path::of_arrows(q, {0, 1});
  Path ab = Path::of_arrows(q, {1, 2});
  Path rr = Path::of_arrows(q, {0, 0});

  CHECK_NOTHROW(make_relation(q, f, {{1, ab}, {2, rr}}));
  // not parallel: ra is 1->2, rr is 1->1
  CHECK_THROWS_AS(make_relation(q, f, {{1, ra}, {1, rr}}), Error);
  // length-1 term is not admissible
  CHECK_THROWS_AS(make_relation(q, f, {{1, Path::of_arrows(q, {0})}}), Error);
  // duplicate path
  CHECK_THROWS_AS(make_relation(q, f, {{1, ab}, {1, ab}}), Error);
  // reversal lives in the opposite quiver
  Relation r = make_relation(q, f, {{1, ab}, {2, rr}});
  Relation rev = reverse_relation(r);
  CHECK(rev.src == r.dst);
  CHECK(rev.terms[0].second.arrows == std::vector<int>{2, 1});
}
