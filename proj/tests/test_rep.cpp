#include <doctest.h>

#include "helpers.hpp"
#include "omega4/rep.hpp"

using namespace omega4;
using omega4::testing::build_a2;
using omega4::testing::build_family;

TEST_CASE("simples and projectives have the advertised shapes") {
  AlgebraTable a = build_family("ii", 2, 3);
  Rep p1 = projective(a, 1);
  CHECK(p1.total_dim() == 5);
  CHECK(p1.dims[1] == 3);  // e1, alpha.beta, (alpha.beta)^2
  CHECK(p1.dims[2] == 2);  // alpha, alpha.beta.alpha

  AlgebraTable b = build_family("iii", 2, 2);
  Rep p2 = projective(b, 2);
  CHECK(p2.total_dim() == 3);
  CHECK(p2.dims[1] == 1);  // beta
  CHECK(p2.dims[2] == 2);  // e2, beta.alpha

  Rep s1 = simple(b, 1);
  CHECK(s1.total_dim() == 1);
  CHECK(s1.dims[1] == 1);
  for (const Mat& m : s1.action) CHECK(m.is_zero());
}

TEST_CASE("rep constructor rejects relation violations") {
  AlgebraTable a = build_family("i", 2, 2);  // K[T]/(T^2)
  std::vector<int> dims{0, 2};
  // T as the full Jordan block of size 2 satisfies T^2 = 0
  Mat ok(a.field, 2, 2);
  ok.at(1, 0) = 1;
  CHECK_NOTHROW(make_rep(a, dims, {ok}));
  // the identity does not
  CHECK_THROWS_AS(make_rep(a, dims, {Mat::identity(a.field, 2)}), Error);
}

TEST_CASE("top, radical, socle") {
  AlgebraTable a = build_family("iii", 2, 3);
  Prng rng;
  for (int i = 1; i <= 2; ++i) {
    Rep p = projective(a, i);
    QuotRep top = top_quotient(p);
    IsoResult iso = is_isomorphic(top.rep, simple(a, i), rng);
    CHECK(iso.isomorphic);
    CHECK(iso.certified);
    // radical of a simple is zero
    CHECK(radical_subrep(simple(a, i)).rep.total_dim() == 0);
  }
  // socle(P_2) = S_2 for family iii
  SubRep soc = socle_subrep(projective(a, 2));
  CHECK(soc.rep.total_dim() == 1);
  CHECK(is_isomorphic(soc.rep, simple(a, 2), rng).isomorphic);
  // socle and top are semisimple
  Rep p1 = projective(a, 1);
  CHECK(radical_subrep(socle_subrep(p1).rep).rep.total_dim() == 0);
  CHECK(radical_subrep(top_quotient(p1).rep).rep.total_dim() == 0);
}

TEST_CASE("hom dimensions: simples and Yoneda") {
  AlgebraTable a = build_family("ii", 1, 2);
  Prng rng;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      CHECK(hom_dim(simple(a, i), simple(a, j)) == (i == j ? 1 : 0));

  // dim Hom(P_i, M) = dim M e_i for a corpus of modules
  std::vector<Rep> corpus = {simple(a, 1), simple(a, 2), projective(a, 1),
                             projective(a, 2),
                             radical_subrep(projective(a, 1)).rep};
  for (int i = 1; i <= 2; ++i)
    for (const Rep& m : corpus)
      CHECK(hom_dim(projective(a, i), m) == m.dims[i]);

  // End(P_1) = e_1 Lambda e_1 = span{e1, alpha beta}
  CHECK(hom_dim(projective(a, 1), projective(a, 1)) == 2);
  CHECK(a.dim_e(1, 1) == 2);
}

TEST_CASE("isomorphism testing") {
  AlgebraTable a = build_family("ii", 1, 2);
  Prng rng;
  Rep p1 = projective(a, 1);
  IsoResult self = is_isomorphic(p1, p1, rng);
  CHECK(self.isomorphic);
  CHECK(self.certified);
  REQUIRE(self.witness.has_value());
  CHECK(map_is_invertible(p1, p1, *self.witness));
  CHECK(map_commutes(p1, p1, *self.witness));
  auto inv = map_inverse(p1, p1, *self.witness);
  REQUIRE(inv.has_value());
  ModuleMap round = compose_maps(*inv, *self.witness);
  for (size_t v = 1; v < round.f.size(); ++v)
    CHECK(round.f[v] == Mat::identity(a.field, p1.dims[v]));

  IsoResult diff = is_isomorphic(simple(a, 1), simple(a, 2), rng);
  CHECK(!diff.isomorphic);
  CHECK(diff.certified);

  // symmetry of the verdict
  Rep r1 = radical_subrep(p1).rep;
  Rep q2 = quotient_rep(projective(a, 2),
                        socle_subspaces(projective(a, 2)))
               .rep;
  IsoResult fwd = is_isomorphic(r1, q2, rng);
  IsoResult bwd = is_isomorphic(q2, r1, rng);
  CHECK(fwd.isomorphic == bwd.isomorphic);
  CHECK(fwd.isomorphic);  // rad P_1 = alpha Lambda = P_2/soc
}

TEST_CASE("fitting split") {
  AlgebraTable a = build_family("iii", 2, 2);
  Prng rng;
  SplitResult s1 = fitting_split(simple(a, 1), rng);
  CHECK(s1.parts.size() == 1);
  CHECK(s1.certified);

  Rep sum = direct_sum(simple(a, 1), simple(a, 2));
  SplitResult s2 = fitting_split(sum, rng);
  CHECK(s2.parts.size() == 2);
  CHECK(s2.certified);

  // rad(P_2) is the indecomposable with dims (1,1)
  Rep rad = radical_subrep(projective(a, 2)).rep;
  CHECK(rad.dims[1] == 1);
  CHECK(rad.dims[2] == 1);
  SplitResult s3 = fitting_split(rad, rng);
  CHECK(s3.parts.size() == 1);
  CHECK(s3.certified);

  // parts sum back to the input up to isomorphism
  Rep big = direct_sum(projective(a, 1), direct_sum(rad, simple(a, 2)));
  SplitResult s4 = fitting_split(big, rng);
  CHECK(s4.parts.size() == 3);
  Rep reassembled = direct_sum_all(a, s4.parts);
  CHECK(is_isomorphic(big, reassembled, rng).isomorphic);
}

TEST_CASE("projectivity detector") {
  AlgebraTable a = build_family("ii", 2, 5);
  Prng rng;
  CHECK(is_projective_rep(projective(a, 1)));
  CHECK(is_projective_rep(direct_sum(projective(a, 1), projective(a, 2))));
  CHECK(!is_projective_rep(simple(a, 1)));
  CHECK(!is_projective_rep(radical_subrep(projective(a, 1)).rep));

  Rep mix = direct_sum(projective(a, 2), simple(a, 1));
  StripResult strip = strip_projective_summands(mix, rng);
  CHECK(strip.stripped.size() == 1);
  CHECK(strip.rep.total_dim() == 1);
}

TEST_CASE("heart of a projective") {
  Prng rng;
  // family iii, t=2: heart(P_2) = S_1
  AlgebraTable a = build_family("iii", 2, 3);
  HeartResult h = heart(a, 2, rng);
  CHECK(h.rep.total_dim() == 1);
  CHECK(is_isomorphic(h.rep, simple(a, 1), rng).isomorphic);

  // family ii, n=1: heart(P_1) has dims (0,1), i.e. S_2
  AlgebraTable b = build_family("ii", 1, 2);
  HeartResult hb = heart(b, 1, rng);
  CHECK(hb.rep.dims[1] == 0);
  CHECK(hb.rep.dims[2] == 1);
  CHECK(is_isomorphic(hb.rep, simple(b, 2), rng).isomorphic);

  // family i, n=3: heart = span{T} and is the simple
  AlgebraTable c = build_family("i", 3, 2);
  HeartResult hc = heart(c, 1, rng);
  CHECK(hc.rep.total_dim() == 1);
  CHECK(is_isomorphic(hc.rep, simple(c, 1), rng).isomorphic);

  // heart of a simple projective is undefined
  AlgebraTable k = build_family("i", 1, 2);
  CHECK_THROWS_AS(heart(k, 1, rng), Error);
}

TEST_CASE("duality: double dual and projectives") {
  Prng rng;
  AlgebraTable a = build_family("ii", 2, 3);
  const AlgebraTable& op = a.opposite();
  for (const Rep& m : {simple(a, 1), projective(a, 1),
                       radical_subrep(projective(a, 2)).rep}) {
    Rep dd = dualize(dualize(m, op), a);
    IsoResult iso = is_isomorphic(dd, m, rng);
    CHECK(iso.isomorphic);
  }
  // dual of a projective is projective over the opposite (selfinjective)
  Rep dp = dualize(projective(a, 1), op);
  CHECK(is_projective_rep(dp));

  // transport through the form brings the dual simple home
  FormSearchResult form = find_symmetrizing_form(a);
  REQUIRE(form.form.has_value());
  for (int i = 1; i <= 2; ++i) {
    Rep back = transport_via_form(*form.form, dualize(simple(a, i), op), a);
    CHECK(is_isomorphic(back, simple(a, i), rng).isomorphic);
  }
  // transport refuses an unverified form
  SymmetrizingForm bogus{Vec(a.dim(), 0), "bogus", 0};
  CHECK_THROWS_AS(transport_via_form(bogus, dualize(simple(a, 1), op), a),
                  Error);
}

TEST_CASE("symmetric algebras have simple socles matching the vertex") {
  Prng rng;
  for (const AlgebraTable& a :
       {build_family("ii", 2, 2), build_family("iii", 3, 3),
        build_family("i", 4, 5)}) {
    REQUIRE(find_symmetrizing_form(a).form.has_value());
    for (int i = 1; i <= a.quiver.num_vertices; ++i) {
      SubRep soc = socle_subrep(projective(a, i));
      CHECK(soc.rep.total_dim() == 1);
      CHECK(is_isomorphic(soc.rep, simple(a, i), rng).isomorphic);
    }
  }
}

TEST_CASE("nakayama helpers") {
  CHECK(has_uniserial_projectives(build_family("i", 4, 2)));
  CHECK(has_uniserial_projectives(build_family("ii", 2, 3)));
  CHECK(!has_uniserial_projectives(build_family("iii", 2, 2)));

  AlgebraTable a = build_family("ii", 1, 2);
  auto quots = projective_radical_quotients(a);
  CHECK(quots.size() == 6);  // Loewy length 3 per vertex
  Prng rng;
  // they are pairwise non-isomorphic
  for (size_t i = 0; i < quots.size(); ++i)
    for (size_t j = i + 1; j < quots.size(); ++j)
      CHECK(!is_isomorphic(quots[i].rep, quots[j].rep, rng).isomorphic);
}
