#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxcanon/acceptance.hpp"
#include "coxcanon/affine_a.hpp"
#include "coxcanon/affine_a_dynamics.hpp"
#include "coxcanon/affine_bd.hpp"
#include "coxcanon/enumerate.hpp"
#include "coxcanon/oracle.hpp"
#include "coxcanon/tower_hecke.hpp"
#include "coxcanon/word_io.hpp"

using namespace coxcanon;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;

struct Options {
  std::string type;
  int rank = 0;
  bool json = false;
  std::optional<int> max_len;
  std::optional<int> affine_len;
  std::string suite = "all";
  std::string file;
  std::vector<std::string> words;
};

struct Normal {
  Word canonical;
  int affine_length = 0;
  GenSet descents;
  std::optional<std::size_t> hat_partner;
};

CoxeterType make_type(const Options& o) {
  return CoxeterType(parse_family(o.type), o.rank);
}

Normal normalize(const Word& w) {
  const CoxeterType& t = w.type;
  Normal out;
  switch (t.family()) {
    case Family::AffineA: {
      CanonicalFormA f = canonicalize(w);
      out.canonical = form_word(f);
      out.affine_length = f.affine_length();
      RightDescentsA r = right_descents_form(f);
      out.descents = r.set;
      out.hat_partner = r.hat_partner;
      return out;
    }
    case Family::AffineB: {
      CanonicalFormB f = b_canonicalize(w);
      out.canonical = b_form_word(f);
      out.affine_length = f.affine_length();
      out.descents = b_right_descents(f);
      return out;
    }
    case Family::AffineD: {
      CanonicalFormD f = d_canonicalize(w);
      out.canonical = d_form_word(f);
      out.affine_length = f.affine_length();
      break;
    }
    case Family::FiniteA:
      out.canonical = finite_word(finite_canonicalize(w), t);
      break;
    case Family::FiniteD:
      out.canonical = finite_d_word(d_finite_canonicalize(w), t);
      break;
  }
  out.descents = element_of(out.canonical).right_descents();
  return out;
}

json labels(const CoxeterType& t, GenSet s) {
  json arr = json::array();
  for (Gen g : s.members()) arr.push_back(t.label(g));
  return arr;
}

std::string label_text(const CoxeterType& t, GenSet s) {
  std::string out;
  for (Gen g : s.members()) out += (out.empty() ? "" : " ") + t.label(g);
  return out.empty() ? "(none)" : out;
}

json normal_json(const std::string& input, const Normal& n) {
  return {{"input", input},
          {"canonical", format_word(n.canonical)},
          {"length", n.canonical.size()},
          {"affine_length", n.affine_length},
          {"right_descents", labels(n.canonical.type, n.descents)}};
}

std::vector<std::string> inputs(const Options& o) {
  std::vector<std::string> out = o.words;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw InputError("cannot read " + o.file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(line);
    }
  }
  if (out.empty()) throw InputError("no word given");
  return out;
}

int cmd_normalize(const Options& o) {
  const CoxeterType t = make_type(o);
  for (const std::string& text : inputs(o)) {
    Normal n = normalize(parse_word(text, t));
    if (o.json) {
      std::cout << normal_json(text, n).dump() << '\n';
      continue;
    }
    std::cout << format_word(n.canonical) << '\n'
              << "  length " << n.canonical.size() << ", affine length "
              << n.affine_length << ", right descents "
              << label_text(t, n.descents) << '\n';
  }
  return kOk;
}

int cmd_descents(const Options& o) {
  const CoxeterType t = make_type(o);
  for (const std::string& text : inputs(o)) {
    Normal n = normalize(parse_word(text, t));
    if (o.json) {
      json j = normal_json(text, n);
      if (n.hat_partner) j["hat_partner"] = *n.hat_partner;
      std::cout << j.dump() << '\n';
      continue;
    }
    std::cout << "R(" << text << ") = {" << label_text(t, n.descents) << "}";
    if (n.hat_partner)
      std::cout << ", a cancels position " << *n.hat_partner << " of "
                << format_word(n.canonical);
    std::cout << '\n';
  }
  return kOk;
}

// Longest element of bounded affine length: the longest admissible block
// plus the longest finite part.
template <class Blocks, class BlockLen>
int length_bound(const Blocks& blocks, BlockLen block_len, int finite_max) {
  int best = 0;
  for (const auto& b : blocks) best = std::max(best, block_len(b));
  return best + finite_max;
}

int cmd_enumerate(const Options& o) {
  const CoxeterType t = make_type(o);
  const int n = o.rank;
  const bool affine = t.is_affine();
  if (affine && !o.max_len && !o.affine_len)
    throw InputError("affine types need --max-len or --affine-len");
  const int m = o.affine_len.value_or(-1);
  constexpr int kNoCap = 1 << 20;

  std::vector<Word> words;
  std::vector<int> affine_lengths;
  auto add = [&](Word w, int L) {
    if (o.max_len && static_cast<int>(w.size()) > *o.max_len) return;
    words.push_back(std::move(w));
    affine_lengths.push_back(L);
  };

  switch (t.family()) {
    case Family::AffineA: {
      int len = o.max_len.value_or(0);
      if (!o.max_len) {
        int fin = 0;
        for (const auto& f : enumerate_finite_a(n))
          fin = std::max(fin, finite_length(f));
        len = length_bound(enumerate_blocks_a(n, m, kNoCap),
                           [](const AffineBlockA& b) { return block_length(b); },
                           fin);
      }
      for (const auto& f : enumerate_forms_a(n, len, m))
        add(form_word(f), f.affine_length());
      break;
    }
    case Family::AffineB: {
      int len = o.max_len.value_or(0);
      if (!o.max_len) {
        int fin = 0;
        for (const auto& f : enumerate_finite_d(n))
          fin = std::max(fin, finite_d_length(f));
        len = length_bound(enumerate_blocks_b(n, m, kNoCap),
                           [](const BBlock& b) {
                             return static_cast<int>(b_block_word(b).size());
                           },
                           fin);
      }
      for (const auto& f : enumerate_forms_b(n, len, m))
        add(b_form_word(f), f.affine_length());
      break;
    }
    case Family::AffineD: {
      int len = o.max_len.value_or(0);
      if (!o.max_len) {
        int fin = 0;
        for (const auto& f : enumerate_finite_d(n))
          fin = std::max(fin, finite_d_length(f));
        len = length_bound(enumerate_blocks_d(n, m, kNoCap),
                           [](const DBlock& b) {
                             return static_cast<int>(d_block_word(b).size());
                           },
                           fin);
      }
      for (const auto& f : enumerate_forms_d(n, len, m))
        add(d_form_word(f), f.affine_length());
      break;
    }
    case Family::FiniteA:
      for (const auto& f : enumerate_finite_a(n)) add(finite_word(f, t), 0);
      break;
    case Family::FiniteD:
      for (const auto& f : enumerate_finite_d(n)) add(finite_d_word(f, t), 0);
      break;
  }

  // shortlex by length, then by text
  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (words[a].size() != words[b].size())
      return words[a].size() < words[b].size();
    return words[a].letters < words[b].letters;
  });

  if (o.json) {
    json forms = json::array();
    for (std::size_t i : order)
      forms.push_back({{"canonical", format_word(words[i])},
                       {"length", words[i].size()},
                       {"affine_length", affine_lengths[i]}});
    std::cout << json{{"type", t.name()}, {"count", words.size()},
                      {"forms", forms}}
                     .dump()
              << '\n';
    return kOk;
  }
  std::vector<int> per_length;
  for (std::size_t i : order) {
    std::cout << format_word(words[i]) << '\n';
    const std::size_t l = words[i].size();
    if (per_length.size() <= l) per_length.resize(l + 1, 0);
    ++per_length[l];
  }
  std::cout << "# " << words.size()
            << (words.size() == 1 ? " element" : " elements");
  for (std::size_t l = 0; l < per_length.size(); ++l)
    std::cout << (l == 0 ? " (by length: " : ", ") << per_length[l];
  if (!per_length.empty()) std::cout << ")";
  std::cout << '\n';
  return kOk;
}

int cmd_embed(const Options& o) {
  const CoxeterType t = make_type(o);
  if (t.family() != Family::AffineA && t.family() != Family::AffineB)
    throw InputError("embed needs --type At or --type Bt");
  for (const std::string& text : inputs(o)) {
    const Word w = parse_word(text, t);
    Normal src = normalize(w);
    Normal img = t.family() == Family::AffineA ? normalize(embed_word(w))
                                                : normalize(b_embed(w));
    const int l = static_cast<int>(src.canonical.size());
    const int L = src.affine_length;
    if (o.json) {
      json j = normal_json(text, img);
      j["source_length"] = l;
      j["source_affine_length"] = L;
      std::cout << j.dump() << '\n';
      continue;
    }
    std::cout << format_word(img.canonical) << '\n'
              << "  l = " << img.canonical.size() << " = " << l << " + 2*" << L
              << ", L = " << img.affine_length << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const std::vector<CheckResult> results = run_acceptance(o.suite);
  if (results.empty()) throw InputError("unknown suite " + o.suite);
  bool ok = true;
  json arr = json::array();
  for (const CheckResult& r : results) {
    ok &= r.passed;
    if (o.json) {
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
      continue;
    }
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] "
              << r.name << " (" << std::fixed << std::setprecision(2)
              << r.seconds << " s)";
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << '\n';
  }
  if (o.json) std::cout << arr.dump() << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical reduced words in affine Coxeter groups"};
  app.require_subcommand(1);
  Options o;

  auto typed = [&](CLI::App* sub, bool words) {
    sub->add_option("--type", o.type, "At, Bt, Dt, A or D")
        ->required()
        ->check(CLI::IsMember({"At", "Bt", "Dt", "A", "D"}));
    sub->add_option("--rank", o.rank,
                    "n: A~_n for At; n+2 generators for Bt and Dt")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "machine-readable output");
    if (words) {
      sub->add_option("--file", o.file, "one word per line");
      sub->add_option("words", o.words, "words, e.g. \"s2 a s1\"");
    }
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "canonical form");
  typed(normalize_cmd, true);
  auto* descents_cmd = app.add_subcommand("descents", "right descent set");
  typed(descents_cmd, true);
  auto* embed_cmd = app.add_subcommand("embed", "image under the tower map");
  typed(embed_cmd, true);
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list canonical forms");
  typed(enumerate_cmd, false);
  enumerate_cmd->add_option("--max-len", o.max_len, "length bound")
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--affine-len", o.affine_len, "affine length bound")
      ->check(CLI::NonNegativeNumber);
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks");
  verify_cmd->add_option("--suite", o.suite, "all, a check name or its number");
  verify_cmd->add_flag("--json", o.json, "machine-readable output");
  // accepted for uniformity with the other subcommands
  verify_cmd->add_option("--type", o.type);
  verify_cmd->add_option("--rank", o.rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(o);
    if (*descents_cmd) return cmd_descents(o);
    if (*embed_cmd) return cmd_embed(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
