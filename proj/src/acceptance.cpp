#include "coxcanon/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "coxcanon/affine_a.hpp"
#include "coxcanon/affine_a_dynamics.hpp"
#include "coxcanon/affine_bd.hpp"
#include "coxcanon/enumerate.hpp"
#include "coxcanon/tower_hecke.hpp"

namespace coxcanon {

namespace {

constexpr int kNoBound = 1 << 20;

Word power(const Word& w, int k) {
  Word out(w.type);
  for (int r = 0; r < k; ++r) out = out * w;
  return out;
}

std::string fails(const std::map<std::string, long>& counts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : counts) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

bool all_zero(const std::map<std::string, long>& counts,
              const std::set<std::string>& informational = {}) {
  for (const auto& [k, v] : counts)
    if (!informational.count(k) && v != 0) return false;
  return true;
}

// ---- 1. Families of canonical forms in W(A~_2).
CheckResult a2_families() {
  const CoxeterType t = affine_a(2);
  const Gen s1 = 0, s2 = 1, a = 2;
  auto w = [&](std::vector<Gen> v) { return Word(t, std::move(v)); };
  const Word q = w({s1, s2, s1, a});
  const std::vector<Word> xs = {w({}),       w({s1}),     w({s2}),
                                w({s1, s2}), w({s2, s1}), w({s1, s2, s1})};
  std::set<std::vector<Gen>> family;
  for (int variant = 1; variant <= 2; ++variant) {
    const Word p = variant == 1 ? w({s2, s1, a}) : w({s1, s2, a});
    for (int h = 0; h <= 4; ++h) {
      for (int k = 0; k <= 4; ++k) {
        std::vector<Word> alphas;
        if (variant == 1) {
          if (h + k != 0) alphas.push_back(w({}));
          alphas.push_back(w({a}));
          alphas.push_back(w({s1, a}));
          if (h == 0) alphas.push_back(w({s2, a}));
        } else {
          if (h + k == 0) continue;
          alphas = {w({}), w({a}), w({s2, a})};
          if (h == 0) alphas.push_back(w({s1, a}));
        }
        for (const Word& al : alphas)
          for (const Word& x : xs) {
            const Word full = al * power(p, h) * power(q, k) * x;
            if (full.size() <= 12) family.insert(full.letters);
          }
      }
    }
  }
  std::map<std::string, long> c{{"unreduced", 0},
                                {"collisions", 0},
                                {"not_canonical", 0},
                                {"uncovered", 0}};
  const Ball ball = enumerate_ball(t, 12);
  ElementMap<Word> targets;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const CanonicalFormA f = canonicalize(ball.witness(i));
    if (f.affine_length() > 0) targets.emplace(ball.entries[i].element, form_word(f));
  }
  ElementMap<int> hits;
  for (const auto& letters : family) {
    const Word fw(t, letters);
    if (!is_reduced(fw)) ++c["unreduced"];
    const GroupElement g = element_of(fw);
    if (++hits[g] > 1) ++c["collisions"];
    auto it = targets.find(g);
    if (it == targets.end() || !(it->second == fw)) ++c["not_canonical"];
  }
  for (const auto& [g, word] : targets)
    if (!hits.count(g)) ++c["uncovered"];
  std::ostringstream os;
  os << family.size() << " family words, " << targets.size()
     << " elements with L>0 and l<=12; " << fails(c);
  return {1, "", all_zero(c), os.str()};
}

// ---- 2. Families of affine blocks in W(A~_3).
CheckResult a3_families() {
  const CoxeterType t = affine_a(3);
  const Gen s1 = 0, s2 = 1, s3 = 2, a = 3;
  auto w = [&](std::vector<Gen> v) { return Word(t, std::move(v)); };
  const Word one = w({}), A = w({a}), S1A = w({s1, a}), S3A = w({s3, a}),
             S23A = w({s2, s3, a}), S21A = w({s2, s1, a});
  std::set<std::vector<Gen>> family;
  auto add = [&](const std::vector<Word>& alphas, const Word& body) {
    for (const Word& al : alphas) {
      const Word full = al * body;
      if (full.count(a) >= 1 && full.count(a) <= 4 && full.size() <= 14)
        family.insert(full.letters);
    }
  };
  const Word e = w({s3, s1, a}), f1 = w({s2, s3, s1, a}),
             h1 = w({s1, s2, s3, s1, a}), h2 = w({s2, s3, s2, s1, a}),
             k1 = w({s1, s2, s3, s2, s1, a}), f3 = w({s1, s2, s3, a}),
             f4 = w({s3, s2, s1, a});
  for (int eps = 0; eps <= 1; ++eps)
    for (int f = 0; f <= 4; ++f)
      for (int h = 0; h <= 4; ++h)
        for (int k = 0; k <= 4; ++k) {
          if (eps + f + h + k > 4) continue;
          const Word tail = power(f1, f);
          // First shape.
          std::vector<Word> al;
          if (eps == 1) al = {one, A};
          else if (f > 0) al = {one, A, S1A, S3A};
          else if (h > 0) al = {one, A, S1A, S3A, S23A};
          else al = {one, A, S1A, S3A, S23A, S21A};
          add(al, power(e, eps) * tail * power(h1, h) * power(k1, k));
          // Second shape, h > 0.
          if (h > 0) {
            if (eps == 1) al = {one, A};
            else if (f > 0) al = {one, A, S1A, S3A};
            else al = {one, A, S1A, S3A, S21A};
            add(al, power(e, eps) * tail * power(h2, h) * power(k1, k));
          }
          if (eps == 0 && f > 0) {
            add({one, A, S3A, S23A}, power(f3, f) * power(h1, h) * power(k1, k));
            add({one, A, S1A, S21A}, power(f4, f) * power(h2, h) * power(k1, k));
          }
        }
  std::map<std::string, long> c{{"unreduced", 0},
                                {"collisions", 0},
                                {"not_canonical", 0},
                                {"uncovered", 0},
                                {"parametrization_mismatch", 0}};
  const Ball ball = enumerate_ball(t, 14);
  ElementMap<Word> targets;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const GroupElement& g = ball.entries[i].element;
    if (!g.right_descents().subset_of(GenSet(1ULL << (a)))) continue;
    const CanonicalFormA f = canonicalize(ball.witness(i));
    if (f.affine_length() >= 1 && f.affine_length() <= 4)
      targets.emplace(g, form_word(f));
  }
  std::set<std::vector<Gen>> generated;
  for (const AffineBlockA& b : enumerate_blocks_a(3, 4, 14))
    if (!b.bricks.empty()) generated.insert(block_word(b).letters);
  for (const auto& [g, word] : targets)
    if (!generated.count(word.letters)) ++c["parametrization_mismatch"];
  if (generated.size() != targets.size()) ++c["parametrization_mismatch"];
  ElementMap<int> hits;
  for (const auto& letters : family) {
    const Word fw(t, letters);
    if (!is_reduced(fw)) ++c["unreduced"];
    const GroupElement g = element_of(fw);
    if (++hits[g] > 1) ++c["collisions"];
    auto it = targets.find(g);
    if (it == targets.end() || !(it->second == fw)) ++c["not_canonical"];
  }
  for (const auto& [g, word] : targets)
    if (!hits.count(g)) ++c["uncovered"];
  std::ostringstream os;
  os << family.size() << " family words, " << targets.size()
     << " blocks with 1<=m<=4 and l<=14; " << fails(c);
  return {2, "", all_zero(c), os.str()};
}

// ---- 3. Pairwise-valid blocks are reduced with descent set {a}.
CheckResult block_soundness() {
  std::map<std::string, long> c{{"unreduced", 0},
                                {"descents", 0},
                                {"affine_length", 0}};
  long blocks = 0, counted = 0;
  for (int n = 2; n <= 4; ++n) {
    const CoxeterType t = affine_a(n);
    AffineCountOracle oracle(t.affine_gen());
    for (const AffineBlockA& b : enumerate_blocks_a(n, 3, kNoBound)) {
      if (b.bricks.empty()) continue;
      ++blocks;
      const Word w = block_word(b);
      if (!is_reduced(w)) ++c["unreduced"];
      const GroupElement g = element_of(w);
      if (!(g.right_descents() == GenSet(1ULL << (t.affine_gen()))))
        ++c["descents"];
      if (w.size() <= 12) {
        ++counted;
        if (oracle.min_count(g) != static_cast<int>(b.bricks.size()))
          ++c["affine_length"];
      }
    }
  }
  std::ostringstream os;
  os << blocks << " blocks (n=2..4, m<=3), " << counted
     << " with exhaustive affine length; " << fails(c);
  return {3, "", all_zero(c), os.str()};
}

// ---- 4. Ball size equals the number of canonical forms.
CheckResult ball_bijection() {
  std::ostringstream os;
  bool ok = true;
  for (int n = 2; n <= 3; ++n) {
    const Ball ball = enumerate_ball(affine_a(n), 8);
    const auto forms = enumerate_forms_a(n, 8);
    std::set<std::vector<Gen>> words;
    ElementMap<int> elements;
    for (const CanonicalFormA& f : forms) {
      const Word w = form_word(f);
      words.insert(w.letters);
      ++elements[element_of(w)];
    }
    const bool good = ball.size() == words.size() &&
                      words.size() == forms.size() &&
                      elements.size() == forms.size();
    ok &= good;
    os << "n=" << n << ": ball " << ball.size() << ", forms " << forms.size()
       << ", distinct elements " << elements.size() << "; ";
  }
  return {4, "", ok, os.str()};
}

// ---- 5. Left multiplication on blocks changes one parameter by one.
CheckResult left_locality() {
  std::map<std::string, long> c{{"wrong_form", 0},
                                {"not_local", 0},
                                {"wrong_direction", 0},
                                {"invalid_block", 0}};
  long checked = 0, one_entry = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const AffineBlockA& b : enumerate_blocks_a(n, 3, kNoBound)) {
      if (b.bricks.empty()) continue;
      const GroupElement g = element_of(block_word(b));
      const int len = length_of(g);
      for (Gen s = 0; s <= n; ++s) {
        ++checked;
        const LeftFormResult r = left_mult_block(s, b);
        CanonicalFormA f{r.block, {n, {}}};
        if (r.kind == LeftFormResult::Kind::FormTimesSigma)
          f.finite.runs.push_back({r.v, r.v});
        if (!validate_block(n, r.block.bricks)) ++c["invalid_block"];
        const GroupElement sg = g.left_times(s);
        if (!(right_lexmin(sg) == form_word(f))) ++c["wrong_form"];
        if (length_of(sg) - len != r.delta) ++c["wrong_direction"];
        if (r.which != LeftFormResult::Case::OneEntry) continue;
        ++one_entry;
        int diffs = 0, dj = 0, di = 0;
        if (r.block.bricks.size() != b.bricks.size()) {
          ++c["not_local"];
          continue;
        }
        for (std::size_t k = 0; k < b.bricks.size(); ++k) {
          const int ddj = r.block.bricks[k].j - b.bricks[k].j;
          const int ddi = r.block.bricks[k].i - b.bricks[k].i;
          diffs += (ddj != 0) + (ddi != 0);
          if (ddj || ddi) {
            dj = ddj;
            di = ddi;
          }
        }
        if (diffs != 1 || std::abs(dj) + std::abs(di) != 1) ++c["not_local"];
        // Brick length n+2+i-j grows when i rises or j falls.
        if (di - dj != r.delta) ++c["wrong_direction"];
      }
    }
  }
  std::ostringstream os;
  os << checked << " products (n<=3, m<=3), " << one_entry
     << " single-entry; " << fails(c);
  return {5, "", all_zero(c), os.str()};
}

// ---- 6. The single-brick automaton.
CheckResult brick_automaton() {
  long bad = 0, checked = 0;
  std::ostringstream os;
  for (int n = 3; n <= 4; ++n) {
    std::set<AutomatonCase> seen;
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 0; i <= n - 1; ++i)
        for (Gen s = 0; s <= n; ++s) {
          ++checked;
          const Brick b{j, i};
          const LeftBrickResult r = left_mult_brick(n, s, b);
          seen.insert(r.rule);
          CanonicalFormA f{{n, {}}, {n, {}}};
          using K = LeftBrickResult::Kind;
          switch (r.kind) {
            case K::BrickTimesSigma:
              f.block.bricks = {b};
              f.finite.runs = {{r.v, r.v}};
              break;
            case K::NewBrick: f.block.bricks = {r.brick}; break;
            case K::TwoBricks: f.block.bricks = {{n + 1, 0}, b}; break;
            case K::Identity: break;
          }
          const GroupElement sg = element_of(s * brick_word(n, b));
          if (!(right_lexmin(sg) == form_word(f))) ++bad;
        }
    os << "n=" << n << ": " << seen.size() << "/14 cases; ";
    if (seen.size() != 14) ++bad;
  }
  os << checked << " brick products, " << bad << " failures";
  return {6, "", bad == 0, os.str()};
}

// ---- 7. Tower map on canonical forms.
CheckResult tower() {
  std::map<std::string, long> c{{"form", 0}, {"affine_length", 0}, {"length", 0}};
  const Ball ball = enumerate_ball(affine_a(2), 8);
  for (std::size_t k = 0; k < ball.size(); ++k) {
    const Word rw = reduced_word(ball.entries[k].element);
    const CanonicalFormA f = canonicalize(rw);
    const Word img = embed_word(rw);
    const CanonicalFormA direct = canonicalize(img);
    if (!(embed_canonical(f) == direct)) ++c["form"];
    if (direct.affine_length() != f.affine_length()) ++c["affine_length"];
    if (length_of(element_of(img)) !=
        ball.entries[k].length + 2 * f.affine_length())
      ++c["length"];
  }
  std::ostringstream os;
  os << ball.size() << " elements of W(A~_2) with l<=8; " << fails(c);
  return {7, "", all_zero(c), os.str()};
}

// ---- 8. Image predicate of the tower map.
CheckResult tower_image() {
  std::map<std::vector<Gen>, CanonicalFormA> image;
  const Ball src = enumerate_ball(affine_a(2), 8);
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Word rw = reduced_word(src.entries[k].element);
    const CanonicalFormA img = canonicalize(embed_word(rw));
    if (img.length() <= 8) image.emplace(form_word(img).letters, canonicalize(rw));
  }
  std::map<std::string, long> c{{"predicate", 0}, {"preimage", 0}};
  const Ball ball = enumerate_ball(affine_a(3), 8);
  long inside = 0;
  for (std::size_t k = 0; k < ball.size(); ++k) {
    const CanonicalFormA f = canonicalize(ball.witness(k));
    const auto pre = in_image(f);
    auto it = image.find(form_word(f).letters);
    if (pre.has_value() != (it != image.end())) {
      ++c["predicate"];
      continue;
    }
    if (!pre) continue;
    ++inside;
    if (!(*pre == it->second) || !(embed_canonical(*pre) == f)) ++c["preimage"];
  }
  std::ostringstream os;
  os << ball.size() << " elements of W(A~_3) with l<=8, " << inside
     << " in the image (" << image.size() << " enumerated); " << fails(c);
  return {8, "", all_zero(c), os.str()};
}

// ---- 9. Triangularity of the Hecke tower map.
CheckResult hecke_triangularity() {
  const Ball ball = enumerate_ball(affine_a(2), 6);
  long bad = 0;
  std::unordered_set<GroupElement, ElementHash> leads;
  for (std::size_t k = 0; k < ball.size(); ++k) {
    const HeckeEmbedding e =
        hecke_embed(HeckeElement::basis(ball.entries[k].element));
    const TriangularityReport& r = e.reports.front();
    if (!r.verified) ++bad;
    leads.insert(r.leading);
  }
  const bool distinct = leads.size() == ball.size();
  std::ostringstream os;
  os << ball.size() << " basis elements with l<=6, " << bad
     << " not triangular, leading terms "
     << (distinct ? "pairwise distinct" : "collide");
  return {9, "", bad == 0 && distinct, os.str()};
}

// ---- 10. B~ blocks, pair rewrites, affine length.
CheckResult b_blocks() {
  std::map<std::string, long> c{{"block_unreduced", 0},
                                {"block_not_lexmin", 0},
                                {"pair_coverage", 0},
                                {"pair_element", 0},
                                {"pair_not_lexmin", 0},
                                {"affine_length_varies", 0}};
  const CoxeterType t3 = affine_b(3);
  long blocks = 0;
  for (const BBlock& b : enumerate_blocks_b(3, 3, kNoBound)) {
    if (b.js.empty()) continue;
    ++blocks;
    const Word w = b_block_word(b);
    if (!is_reduced(w)) ++c["block_unreduced"];
    else if (!(right_lexmin(element_of(w)) == w)) ++c["block_not_lexmin"];
  }
  long pairs = 0;
  for (int n = 3; n <= 4; ++n) {
    for (int i = -n; i <= n + 1; ++i)
      for (int j = -n; j <= n; ++j) {
        ++pairs;
        const Word w = b_block_word({n, {i, j}});
        const Word lexmin = right_lexmin(element_of(w));
        const auto rw = b_pair_rewrite(n, i, j);
        if (rw.has_value() != !(lexmin == w)) ++c["pair_coverage"];
        if (!rw) continue;
        const Word out = b_block_word({n, {rw->left, rw->right}}) * (n - 1);
        if (!(element_of(out) == element_of(w))) ++c["pair_element"];
        if (!(out == lexmin)) ++c["pair_not_lexmin"];
      }
  }
  const Ball ball = enumerate_ball(t3, 8);
  AffineCountOracle oracle(t3.affine_gen());
  for (const auto& e : ball.entries) {
    const GenCount gc = oracle.count(e.element);
    if (gc.min != gc.max) ++c["affine_length_varies"];
  }
  std::ostringstream os;
  os << blocks << " blocks (n=3, m<=3), " << pairs << " pairs (n=3,4), "
     << ball.size() << " elements with l<=8; " << fails(c);
  return {10, "", all_zero(c), os.str()};
}

// ---- 11. The B~ embedding.
CheckResult b_embedding() {
  const CoxeterType src = affine_b(2);
  const Ball ball = enumerate_ball(src, 8);
  std::map<std::string, long> c{{"length", 0}, {"affine_length", 0}, {"unreduced", 0}};
  for (const auto& e : ball.entries) {
    const Word rw = reduced_word(e.element);
    const int L = rw.count(src.affine_gen());
    const Word img = b_embed(rw);
    if (!is_reduced(img)) ++c["unreduced"];
    const GroupElement g = element_of(img);
    if (length_of(g) != e.length + 2 * L) ++c["length"];
    if (right_lexmin(g).count(img.type.affine_gen()) != L) ++c["affine_length"];
  }
  std::ostringstream os;
  os << ball.size() << " elements of the n=2 diagram with l<=8; " << fails(c);
  return {11, "", all_zero(c), os.str()};
}

// ---- 12. D~ bricks and blocks.
CheckResult d_blocks() {
  std::map<std::string, long> c{{"set_e", 0},
                                {"extremal", 0},
                                {"block_unreduced", 0},
                                {"block_not_lexmin", 0},
                                {"table_vs_oracle", 0},
                                {"clause_mismatch", 0}};
  const int n = 3;
  const CoxeterType fd = finite_d(n);
  const Ball ball = enumerate_ball(fd, n * (n + 1));
  std::set<DBrick> oracle_e;
  AffineCountOracle count(n - 2);
  long ext = 0;
  for (std::size_t k = 0; k < ball.size(); ++k) {
    const GroupElement& g = ball.entries[k].element;
    if (!(g.right_descents() == GenSet(1ULL << (n - 2)))) continue;
    const FiniteDCanonical f = d_finite_canonicalize(ball.witness(k));
    DBrick b{n + 1, n};
    if (f.runs.size() == 2) b = {f.runs[0].m, f.runs[1].m};
    else if (f.runs.size() == 1) b = {n + 1, f.runs[0].m};
    oracle_e.insert(b);
    const bool x = count.min_count(g) >= 2;
    ext += x;
    if (x != d_is_extremal(n, b)) ++c["extremal"];
  }
  const auto param = d_set_e(n);
  if (std::set<DBrick>(param.begin(), param.end()) != oracle_e) ++c["set_e"];
  const long expected = 2L * n * (n + 1) - 1;
  if (static_cast<long>(oracle_e.size()) != expected) ++c["set_e"];
  long blocks = 0;
  for (const DBlock& b : enumerate_blocks_d(n, 2, kNoBound)) {
    if (b.bricks.empty()) continue;
    ++blocks;
    const Word w = d_block_word(b);
    if (!is_reduced(w)) ++c["block_unreduced"];
    else if (!(right_lexmin(element_of(w)) == w)) ++c["block_not_lexmin"];
  }
  long described = 0;
  for (int m = 3; m <= 4; ++m) {
    const auto& stored = d_pair_table(m);
    if (stored != d_pair_table_oracle(m)) ++c["table_vs_oracle"];
    auto all = d_set_e(m);
    all.push_back({m + 1, m});
    for (const DBrick& p : all)
      for (const DBrick& q : all) {
        if (!d_is_extremal(m, q)) continue;
        const auto clause = d_pair_clause(m, p, q);
        if (!clause) continue;
        ++described;
        if (*clause != (stored.count({p, q}) > 0)) ++c["clause_mismatch"];
      }
  }
  std::ostringstream os;
  os << "|E|=" << oracle_e.size() << " (expected " << expected << "), "
     << ext << " extremal, " << blocks << " blocks with m<=2, " << described
     << " clause-described pairs at n=3,4; " << fails(c);
  return {12, "", all_zero(c), os.str()};
}

// ---- 13. Property suites.
CheckResult properties() {
  std::map<std::string, long> c{{"rigidity", 0},
                                {"rigid_element", 0},
                                {"subadditivity", 0},
                                {"double_coset", 0},
                                {"single_edit", 0}};
  std::mt19937 rng(20240611);
  auto random_word = [&](const CoxeterType& t, int max_len, bool finite) {
    Word w(t);
    const int gens = finite ? t.n() : t.rank();
    const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    std::uniform_int_distribution<int> pick(0, gens - 1);
    for (int k = 0; k < len; ++k) w.letters.push_back(pick(rng));
    return w;
  };

  // Rigidity: u s_1...s_n reduced implies u s_1...s_n a reduced.
  long samples = 0;
  for (int n = 1; n <= 4; ++n) {
    const CoxeterType t = affine_a(n);
    Word chain(t), mirror(t);
    for (int k = 1; k <= n; ++k) {
      chain.letters.push_back(k - 1);
      mirror.letters.push_back(n - k);
    }
    for (int got = 0; got < 250;) {
      const Word u = reduced_word(element_of(random_word(t, 12, false)));
      const Word& tail = (got % 2) ? mirror : chain;
      const Word w = u * tail;
      if (!is_reduced(w)) continue;
      ++got;
      ++samples;
      if (!is_reduced(w * t.affine_gen())) ++c["rigidity"];
    }
  }

  // Left truncations of (s_1...s_n a)^k have a unique reduced word.
  for (int n = 1; n <= 4; ++n) {
    const CoxeterType t = affine_a(n);
    Word unit(t);
    for (int k = 1; k <= n; ++k) unit.letters.push_back(k - 1);
    unit.letters.push_back(n);
    for (int k = 1; k <= 3; ++k) {
      const Word full = power(unit, k);
      for (std::size_t cut = 0; cut + 1 < full.size(); ++cut) {
        const Word suffix(t, {full.letters.begin() + cut, full.letters.end()});
        const auto words = reduced_words_of(element_of(suffix));
        if (words.size() != 1 || !(words.front() == suffix)) ++c["rigid_element"];
      }
    }
  }

  // Affine length: |L(u)-L(v)| <= L(uv) <= L(u)+L(v), and L(xwy) = L(w).
  auto L = [](const Word& w) { return canonicalize(w).affine_length(); };
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + k % 4;
    const CoxeterType t = affine_a(n);
    const Word u = random_word(t, 10, false), v = random_word(t, 10, false);
    const int lu = L(u), lv = L(v), luv = L(u * v);
    if (luv > lu + lv || luv < std::abs(lu - lv)) ++c["subadditivity"];
    const Word x = random_word(t, 8, true), y = random_word(t, 8, true);
    if (L(x * u * y) != lu) ++c["double_coset"];
  }

  // Left multiplication edits the right-lex-min word in one place.
  long edits = 0;
  const std::vector<CoxeterType> types = {
      affine_a(1), affine_a(2), finite_a(1), finite_a(2), finite_a(3),
      finite_d(2)};
  for (const CoxeterType& t : types) {
    const GeneratorOrder order = GeneratorOrder::default_for(t);
    const Ball ball = enumerate_ball(t, 8);
    for (const auto& e : ball.entries) {
      const Word w = right_lexmin(e.element);
      for (Gen s = 0; s < t.rank(); ++s) {
        ++edits;
        const Word sw = right_lexmin(e.element.left_times(s));
        bool ok = false;
        if (sw.size() + 1 == w.size()) {
          for (std::size_t j = 0; j < w.size() && !ok; ++j) {
            Word d = w;
            d.letters.erase(d.letters.begin() + j);
            ok = d == sw;
          }
        } else if (sw.size() == w.size() + 1) {
          for (std::size_t j = 0; j <= w.size() && !ok; ++j) {
            Word d = sw;
            const Gen ins = d[j];
            d.letters.erase(d.letters.begin() + j);
            if (!(d == w)) continue;
            ok = j == 0 || order.less(ins, w[j - 1]);
          }
        }
        if (!ok) ++c["single_edit"];
      }
    }
  }
  std::ostringstream os;
  os << samples << " rigidity samples, 1000 affine-length pairs, " << edits
     << " single-edit products; " << fails(c);
  return {13, "", all_zero(c), os.str()};
}

using Runner = std::function<CheckResult()>;

const std::vector<std::pair<SuiteInfo, Runner>>& registry() {
  static const std::vector<std::pair<SuiteInfo, Runner>> r = {
      {{1, "a2-families", "A~_2 families match the canonical forms, l<=12"},
       a2_families},
      {{2, "a3-families", "A~_3 block families match, m<=4, l<=14"},
       a3_families},
      {{3, "block-soundness", "valid A~ blocks are reduced with R={a}"},
       block_soundness},
      {{4, "ball-bijection", "ball size equals canonical form count, l<=8"},
       ball_bijection},
      {{5, "left-locality", "left multiplication edits one block entry"},
       left_locality},
      {{6, "brick-automaton", "all 14 brick automaton cases, n=3,4"},
       brick_automaton},
      {{7, "tower", "tower map commutes with canonicalization"}, tower},
      {{8, "tower-image", "image predicate and preimages of the tower map"},
       tower_image},
      {{9, "hecke-triangularity", "Hecke tower map is unitriangular"},
       hecke_triangularity},
      {{10, "b-blocks", "B~ blocks, pair rewrites and affine length"},
       b_blocks},
      {{11, "b-embedding", "B~ embedding length bookkeeping"}, b_embedding},
      {{12, "d-blocks", "D~ set E, extremal bricks, blocks and pair table"},
       d_blocks},
      {{13, "properties", "rigidity, affine length and single-edit suites"},
       properties},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& acceptance_suites() {
  static const std::vector<SuiteInfo> s = [] {
    std::vector<SuiteInfo> out;
    for (const auto& [info, run] : registry()) out.push_back(info);
    return out;
  }();
  return s;
}

CheckResult run_acceptance(int id) {
  for (const auto& [info, run] : registry()) {
    if (info.id != id) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = id;
    r.name = info.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    return r;
  }
  throw InputError("no acceptance check with id " + std::to_string(id));
}

std::vector<CheckResult> run_acceptance(const std::string& which) {
  std::vector<CheckResult> out;
  for (const SuiteInfo& s : acceptance_suites())
    if (which == "all" || which == s.name || which == std::to_string(s.id))
      out.push_back(run_acceptance(s.id));
  if (out.empty()) throw InputError("unknown suite '" + which + "'");
  return out;
}

}  // namespace coxcanon
