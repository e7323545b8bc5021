#include "eqkit/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace eqkit {

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Literal{it->gen, -it->sign});
  return out;
}

bool sig_has_inv(Sig s) { return s == Sig::MulInv1 || s == Sig::MulInv; }
bool sig_has_one(Sig s) { return s == Sig::MulInv1 || s == Sig::Mul1; }

std::string sig_name(Sig s) {
  switch (s) {
    case Sig::MulInv1: return "mul_inv_1";
    case Sig::Mul1: return "mul_1";
    case Sig::MulInv: return "mul_inv";
    case Sig::Mul: return "mul";
  }
  return "?";
}

std::optional<Sig> sig_from_name(const std::string& n) {
  if (n == "mul_inv_1") return Sig::MulInv1;
  if (n == "mul_1") return Sig::Mul1;
  if (n == "mul_inv") return Sig::MulInv;
  if (n == "mul") return Sig::Mul;
  return std::nullopt;
}

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name) return static_cast<int>(i);
  return -1;
}

int relation_length(const Relation& r) {
  return static_cast<int>(r.lhs.size() + r.rhs.size());
}

long long total_length(const Presentation& p) {
  long long t = static_cast<long long>(p.gens.size());
  for (const Relation& r : p.rels) t += relation_length(r);
  return t;
}

int eval_word(const FiniteGroup& g, const std::vector<int>& images, const GroupWord& w) {
  int acc = g.identity;
  for (const Literal& l : w) {
    int v = images.at(l.gen);
    acc = g.mul(acc, l.sign < 0 ? g.inv(v) : v);
  }
  return acc;
}

std::vector<std::optional<GroupWord>> minimal_words(const FiniteGroup& g,
                                                    const std::vector<int>& images,
                                                    Sig sig) {
  std::vector<std::optional<GroupWord>> words(g.n);
  words[g.identity] = GroupWord{};
  std::deque<int> frontier{g.identity};
  // alphabet in tie-break order: g0, g0^-1, g1, g1^-1, ...
  std::vector<Literal> alphabet;
  for (size_t j = 0; j < images.size(); ++j) {
    alphabet.push_back(Literal{static_cast<int>(j), +1});
    if (sig_has_inv(sig)) alphabet.push_back(Literal{static_cast<int>(j), -1});
  }
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (const Literal& l : alphabet) {
      int v = images[l.gen];
      int y = g.mul(x, l.sign < 0 ? g.inv(v) : v);
      if (!words[y]) {
        GroupWord w = *words[x];
        w.push_back(l);
        words[y] = std::move(w);
        frontier.push_back(y);
      }
    }
  }
  return words;
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

BasePresentation base_presentation(const FiniteGroup& s) {
  if (!is_simple(s))
    throw SubgroupError(SubgroupError::Kind::NotSimple,
                        "base_presentation: group '" + s.label + "' is not simple");
  BasePresentation bp;
  if (is_prime(s.n)) {
    int a = -1;
    for (int x = 0; x < s.n; ++x)
      if (x != s.identity) {
        a = x;
        break;
      }
    bp.pres.gens = {"a"};
    Relation r;
    for (int i = 0; i < s.n; ++i) r.lhs.push_back(Literal{0, +1});
    bp.pres.rels.push_back(std::move(r));
    bp.images = {a};
    return bp;
  }
  // multiplication-table presentation
  for (int x = 0; x < s.n; ++x) {
    bp.pres.gens.push_back("g" + std::to_string(x));
    bp.images.push_back(x);
  }
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      Relation r;
      r.lhs = {Literal{x, +1}, Literal{y, +1}, Literal{s.mul(x, y), -1}};
      bp.pres.rels.push_back(std::move(r));
    }
  return bp;
}

namespace {

std::string unique_name(const std::vector<std::string>& taken, std::string candidate) {
  auto used = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  while (used(candidate)) candidate += "_";
  return candidate;
}

}  // namespace

Lifted lift_presentation(const FiniteGroup& m, const std::vector<int>& n_elems,
                         const Presentation& pres_n, const std::vector<int>& images_n,
                         const Presentation& pres_q, const std::vector<int>& images_q) {
  std::vector<int> n_sorted = n_elems;
  std::sort(n_sorted.begin(), n_sorted.end());
  n_sorted.erase(std::unique(n_sorted.begin(), n_sorted.end()), n_sorted.end());
  if (!is_subgroup(m, n_sorted))
    throw SubgroupError(SubgroupError::Kind::NotSubgroup,
                        "lift_presentation: N is not a subgroup");
  if (!is_normal(m, n_sorted))
    throw SubgroupError(SubgroupError::Kind::NotNormal,
                        "lift_presentation: N is not normal in M");
  for (int v : images_n)
    if (!std::binary_search(n_sorted.begin(), n_sorted.end(), v))
      throw SubgroupError(SubgroupError::Kind::GeneratorImageNotInSubgroup,
                          "lift_presentation: generator image " + std::to_string(v) +
                              " lies outside N");
  if (subgroup_generated(m, images_n) != n_sorted)
    throw PreconditionError("lift_presentation: images do not generate N");
  if (images_n.size() != pres_n.gens.size() || images_q.size() != pres_q.gens.size())
    throw Error("lift_presentation: image count mismatch");

  Quotient q = quotient_by(m, n_sorted);
  for (int v : images_q)
    if (v < 0 || v >= q.group.n)
      throw Error("lift_presentation: quotient image out of range");

  Lifted out;
  out.pres.sig = pres_n.sig;
  out.pres.gens = pres_n.gens;
  out.images = images_n;
  const int na = static_cast<int>(pres_n.gens.size());
  for (size_t i = 0; i < pres_q.gens.size(); ++i) {
    out.pres.gens.push_back(unique_name(out.pres.gens, pres_q.gens[i]));
    out.images.push_back(q.reps[images_q[i]]);
  }
  out.new_gens = static_cast<int>(pres_q.gens.size());

  // family (1): the N-relations carry over verbatim
  out.pres.rels = pres_n.rels;

  auto words_n = minimal_words(m, images_n, pres_n.sig);

  auto word_for = [&](int element, const char* what) -> const GroupWord& {
    if (!std::binary_search(n_sorted.begin(), n_sorted.end(), element) ||
        !words_n[element])
      throw SubgroupError(SubgroupError::Kind::GeneratorImageNotInSubgroup,
                          std::string("lift_presentation: ") + what +
                              " lands outside N");
    return *words_n[element];
  };

  // family (2): w_ij b_i a_j^-1 b_i^-1
  for (int i = 0; i < out.new_gens; ++i) {
    int bhat = out.images[na + i];
    for (int j = 0; j < na; ++j) {
      int conj = m.mul(m.mul(bhat, images_n[j]), m.inv(bhat));
      Relation r;
      r.lhs = word_for(conj, "conjugate of an N-generator");
      r.lhs.push_back(Literal{na + i, +1});
      r.lhs.push_back(Literal{j, -1});
      r.lhs.push_back(Literal{na + i, -1});
      out.pres.rels.push_back(std::move(r));
    }
  }

  // family (3): u_i^-1 v_i for each quotient relation v_i
  for (const Relation& vr : pres_q.rels) {
    if (!vr.rhs.empty())
      throw Error("lift_presentation: quotient relations must have empty rhs");
    GroupWord lifted;
    for (const Literal& l : vr.lhs) lifted.push_back(Literal{na + l.gen, l.sign});
    int val = eval_word(m, out.images, lifted);
    Relation r;
    r.lhs = inverse_word(word_for(val, "lifted quotient relation"));
    r.lhs.insert(r.lhs.end(), lifted.begin(), lifted.end());
    out.pres.rels.push_back(std::move(r));
  }

  out.new_rels = static_cast<int>(out.pres.rels.size() - pres_n.rels.size());
  for (size_t k = pres_n.rels.size(); k < out.pres.rels.size(); ++k)
    out.max_new_rellen = std::max(out.max_new_rellen, relation_length(out.pres.rels[k]));
  return out;
}

std::optional<std::string> PresentationMetrics::violated_recurrence() const {
  for (int i = 1; i <= stages; ++i) {
    if (gen[i - 1] > i * cat_gen) return "gen(" + std::to_string(i) + ")";
    if (len[i - 1] > i * cat_len) return "len(" + std::to_string(i) + ")";
  }
  for (int i = 1; i < stages; ++i) {
    if (rel[i] > rel[i - 1] + cat_gen * gen[i - 1] + cat_gen)
      return "rel(" + std::to_string(i + 1) + ")";
    int bound = std::max({rellen[i - 1], 3 + len[i - 1], cat_len + len[i - 1]});
    if (rellen[i] > bound) return "rellen(" + std::to_string(i + 1) + ")";
  }
  return std::nullopt;
}

CatalogEntry make_catalog_entry(const FiniteGroup& s) {
  CatalogEntry e;
  e.sample = s;
  BasePresentation bp = base_presentation(s);
  e.pres = std::move(bp.pres);
  e.images = std::move(bp.images);
  auto words = minimal_words(s, e.images, e.pres.sig);
  e.words.resize(s.n);
  for (int x = 0; x < s.n; ++x) {
    if (!words[x]) throw Error("make_catalog_entry: generators do not span");
    e.words[x] = std::move(*words[x]);
    e.worst_len = std::max(e.worst_len, static_cast<int>(e.words[x].size()));
  }
  return e;
}

int SimpleCatalog::locate(const FiniteGroup& s) {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].sample.n == s.n && find_isomorphism(entries[i].sample, s))
      return static_cast<int>(i);
  entries.push_back(make_catalog_entry(s));
  return static_cast<int>(entries.size()) - 1;
}

int SimpleCatalog::max_gens() const {
  int v = 0;
  for (auto& e : entries) v = std::max(v, static_cast<int>(e.pres.gens.size()));
  return v;
}
int SimpleCatalog::max_rels() const {
  int v = 0;
  for (auto& e : entries) v = std::max(v, static_cast<int>(e.pres.rels.size()));
  return v;
}
int SimpleCatalog::max_rellen() const {
  int v = 0;
  for (auto& e : entries)
    for (auto& r : e.pres.rels) v = std::max(v, relation_length(r));
  return v;
}
int SimpleCatalog::max_word_len() const {
  int v = 0;
  for (auto& e : entries) v = std::max(v, e.worst_len);
  return v;
}

namespace {

std::string stage_gen_name(int stage, int idx, int count) {
  std::string base = stage <= 26 ? std::string(1, static_cast<char>('a' + stage - 1))
                                 : "g" + std::to_string(stage) + "_";
  if (count == 1) return base;
  return base + std::to_string(idx + 1);
}

// Renames an entry's generators to the given stage's names.
Presentation rename_for_stage(const Presentation& p, int stage) {
  Presentation out = p;
  const int count = static_cast<int>(p.gens.size());
  for (int i = 0; i < count; ++i) out.gens[i] = stage_gen_name(stage, i, count);
  return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

ShortPresentation build_short_presentation(const FiniteGroup& h, SimpleCatalog& catalog) {
  ShortPresentation sp;
  sp.series = composition_series(h);
  sp.words.assign(h.n, GroupWord{});
  sp.pres.sig = Sig::MulInv1;

  const int m = static_cast<int>(sp.series.factors.size());
  sp.metrics.stages = m;
  if (m == 0) {
    sp.metrics.total = 0;
    return sp;
  }

  // stage 1: the bottom factor is (isomorphic to) the subgroup H_1 itself
  {
    SubgroupView view = subgroup_group(h, sp.series.subgroups[1]);
    int ei = catalog.locate(view.group);
    const CatalogEntry& entry = catalog.entries[ei];
    auto iso = find_isomorphism(entry.sample, view.group);
    if (!iso) throw Error("build_short_presentation: catalog lookup failed");
    sp.pres = rename_for_stage(entry.pres, 1);
    sp.images.clear();
    for (int img : entry.images) sp.images.push_back(view.to_parent[(*iso)[img]]);
    auto iso_inv = inverse_permutation(*iso);
    for (int local = 0; local < view.group.n; ++local)
      sp.words[view.to_parent[local]] = entry.words[iso_inv[local]];
  }

  auto record_stage = [&](int stage_index, const std::vector<int>& members) {
    sp.metrics.gen.push_back(static_cast<int>(sp.pres.gens.size()));
    sp.metrics.rel.push_back(static_cast<int>(sp.pres.rels.size()));
    int rl = 0;
    for (auto& r : sp.pres.rels) rl = std::max(rl, relation_length(r));
    sp.metrics.rellen.push_back(rl);
    int wl = 0;
    for (int p : members) wl = std::max(wl, static_cast<int>(sp.words[p].size()));
    sp.metrics.len.push_back(wl);
    (void)stage_index;
  };
  record_stage(1, sp.series.subgroups[1]);

  for (int stage = 2; stage <= m; ++stage) {
    SubgroupView view = subgroup_group(h, sp.series.subgroups[stage]);
    std::vector<int> n_local;
    for (int p : sp.series.subgroups[stage - 1]) n_local.push_back(view.from_parent[p]);

    Quotient q = quotient_by(view.group, n_local);
    int ei = catalog.locate(q.group);
    const CatalogEntry& entry = catalog.entries[ei];
    auto iso = find_isomorphism(entry.sample, q.group);
    if (!iso) throw Error("build_short_presentation: catalog lookup failed");
    Presentation pres_q = rename_for_stage(entry.pres, stage);
    std::vector<int> images_q;
    for (int img : entry.images) images_q.push_back((*iso)[img]);

    // current presentation, with images translated into the local group
    std::vector<int> images_local;
    for (int img : sp.images) images_local.push_back(view.from_parent[img]);

    Lifted lifted =
        lift_presentation(view.group, n_local, sp.pres, images_local, pres_q, images_q);

    const int na = static_cast<int>(sp.pres.gens.size());
    sp.pres = lifted.pres;
    sp.images.clear();
    for (int img : lifted.images) sp.images.push_back(view.to_parent[img]);

    // element words: w_a(m) concatenated with w_b(m)
    auto iso_inv = inverse_permutation(*iso);
    std::vector<int> b_images_local(lifted.images.begin() + na, lifted.images.end());
    for (int local = 0; local < view.group.n; ++local) {
      int parent = view.to_parent[local];
      if (std::binary_search(sp.series.subgroups[stage - 1].begin(),
                             sp.series.subgroups[stage - 1].end(), parent))
        continue;  // words over the a-generators stay as they are
      const GroupWord& wq = entry.words[iso_inv[q.proj[local]]];
      GroupWord wb;
      int y = view.group.identity;
      for (const Literal& l : wq) {
        wb.push_back(Literal{na + l.gen, l.sign});
        int v = b_images_local[l.gen];
        y = view.group.mul(y, l.sign < 0 ? view.group.inv(v) : v);
      }
      int a_part = view.group.mul(local, view.group.inv(y));
      GroupWord w = sp.words[view.to_parent[a_part]];
      w.insert(w.end(), wb.begin(), wb.end());
      sp.words[parent] = std::move(w);
    }
    record_stage(stage, sp.series.subgroups[stage]);
  }

  sp.metrics.cat_gen = catalog.max_gens();
  sp.metrics.cat_len = catalog.max_word_len();
  sp.metrics.cat_rel = catalog.max_rels();
  sp.metrics.cat_rellen = catalog.max_rellen();
  sp.metrics.total = total_length(sp.pres);
  return sp;
}

GroupWord express_element(const ShortPresentation& sp, int element) {
  if (element < 0 || element >= static_cast<int>(sp.words.size()))
    throw Error("express_element: element out of range");
  return sp.words[element];
}

int default_max_cosets(int target_order) { return 20 * target_order; }

VerifyResult verify_presents(const Presentation& p, const std::vector<int>& images,
                             const FiniteGroup& target, int max_cosets) {
  VerifyResult r;
  if (images.size() != p.gens.size()) {
    r.status = VerifyResult::Status::RelationFails;
    r.detail = "image count does not match generator count";
    return r;
  }
  for (size_t i = 0; i < p.rels.size(); ++i) {
    int lhs = eval_word(target, images, p.rels[i].lhs);
    int rhs = eval_word(target, images, p.rels[i].rhs);
    if (lhs != rhs) {
      r.status = VerifyResult::Status::RelationFails;
      r.detail = "relation " + std::to_string(i) + " (" + word_text(p, p.rels[i].lhs) +
                 ") evaluates to " + std::to_string(lhs) + " not " + std::to_string(rhs);
      return r;
    }
  }
  if (static_cast<int>(subgroup_generated(target, images).size()) != target.n) {
    r.status = VerifyResult::Status::NotGenerating;
    r.detail = "generator images do not generate the target";
    return r;
  }
  TCResult tc = todd_coxeter(p, max_cosets > 0 ? max_cosets : default_max_cosets(target.n));
  if (!tc.order) {
    r.status = VerifyResult::Status::Inconclusive;
    r.detail = "coset enumeration hit the table limit after " +
               std::to_string(tc.cosets_defined) + " definitions";
    return r;
  }
  if (*tc.order != target.n) {
    r.status = VerifyResult::Status::OrderMismatch;
    r.detail = "presented group has order " + std::to_string(*tc.order) + ", target has " +
               std::to_string(target.n);
    return r;
  }
  r.detail = "order " + std::to_string(target.n) + " confirmed";
  return r;
}

TranslatedPresentation translate_signature(const Presentation& p,
                                           const std::vector<int>& images,
                                           const FiniteGroup& target, Sig to) {
  if ((sig_has_inv(to) && !sig_has_inv(p.sig)) || (sig_has_one(to) && !sig_has_one(p.sig)))
    throw Error("translate_signature: target signature is not a reduct of the source");

  TranslatedPresentation t;
  t.pres = p;
  t.images = images;
  t.source_gen.resize(p.gens.size());
  for (size_t i = 0; i < p.gens.size(); ++i) t.source_gen[i] = static_cast<int>(i);

  if (sig_has_inv(p.sig) && !sig_has_inv(to)) {
    const int old_count = static_cast<int>(t.pres.gens.size());
    std::vector<int> formal(old_count, -1);
    for (int g = 0; g < old_count; ++g) {
      formal[g] = static_cast<int>(t.pres.gens.size());
      t.pres.gens.push_back(unique_name(t.pres.gens, t.pres.gens[g] + "'"));
      t.images.push_back(target.inv(t.images[g]));
      t.source_gen.push_back(g);
    }
    auto positive = [&](GroupWord& w) {
      for (Literal& l : w)
        if (l.sign < 0) {
          l.gen = formal[l.gen];
          l.sign = +1;
        }
    };
    for (Relation& r : t.pres.rels) {
      positive(r.lhs);
      positive(r.rhs);
    }
    for (int g = 0; g < old_count; ++g)
      t.pres.rels.push_back(
          Relation{{Literal{g, +1}, Literal{formal[g], +1}}, {}});
  }

  if (sig_has_one(p.sig) && !sig_has_one(to)) {
    const int e = static_cast<int>(t.pres.gens.size());
    t.pres.gens.push_back(unique_name(t.pres.gens, "e"));
    t.images.push_back(target.identity);
    t.source_gen.push_back(-1);
    for (Relation& r : t.pres.rels) {
      if (r.lhs.empty()) r.lhs = {Literal{e, +1}};
      if (r.rhs.empty()) r.rhs = {Literal{e, +1}};
    }
    for (int g = 0; g <= e; ++g)
      for (Relation r : {Relation{{Literal{g, +1}, Literal{e, +1}}, {Literal{g, +1}}},
                         Relation{{Literal{e, +1}, Literal{g, +1}}, {Literal{g, +1}}}})
        if (std::find(t.pres.rels.begin(), t.pres.rels.end(), r) == t.pres.rels.end())
          t.pres.rels.push_back(std::move(r));
  }

  t.pres.sig = to;
  return t;
}

GroupWord translate_word(const TranslatedPresentation& t, const Presentation& original,
                         const GroupWord& w) {
  const int old_count = static_cast<int>(original.gens.size());
  std::vector<int> formal(old_count, -1);
  int e = -1;
  for (size_t k = old_count; k < t.source_gen.size(); ++k) {
    if (t.source_gen[k] < 0) e = static_cast<int>(k);
    else formal[t.source_gen[k]] = static_cast<int>(k);
  }
  GroupWord out;
  for (const Literal& l : w) {
    if (l.sign < 0 && !sig_has_inv(t.pres.sig)) {
      if (formal[l.gen] < 0) throw Error("translate_word: no formal inverse generator");
      out.push_back(Literal{formal[l.gen], +1});
    } else {
      out.push_back(l);
    }
  }
  if (out.empty() && !sig_has_one(t.pres.sig)) {
    if (e < 0) throw Error("translate_word: no identity generator");
    out.push_back(Literal{e, +1});
  }
  return out;
}

std::string word_text(const Presentation& p, const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += p.gens[w[i].gen];
    if (w[i].sign < 0) out += '\'';
  }
  return out;
}

std::string presentation_text(const Presentation& p, const std::vector<int>* images) {
  std::ostringstream os;
  os << "sig: " << sig_name(p.sig) << "\n";
  os << "gens:";
  for (auto& g : p.gens) os << ' ' << g;
  os << "\n";
  if (images) {
    os << "map:";
    for (int v : *images) os << ' ' << v;
    os << "\n";
  }
  for (const Relation& r : p.rels) {
    os << word_text(p, r.lhs);
    if (!r.rhs.empty()) os << " = " << word_text(p, r.rhs);
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

GroupWord parse_word_tokens(const Presentation& p,
                            const std::vector<std::string>& toks, size_t from,
                            size_t to) {
  if (to - from == 1 && toks[from] == "1") return {};
  GroupWord w;
  for (size_t i = from; i < to; ++i) {
    std::string name = toks[i];
    int sign = +1;
    if (sig_has_inv(p.sig) && name.size() > 1 && name.back() == '\'') {
      name.pop_back();
      sign = -1;
    }
    int g = p.gen_index(name);
    if (g < 0)
      throw ParseError(ParseError::Kind::UnknownSymbol,
                       "presentation: unknown generator '" + toks[i] + "'");
    w.push_back(Literal{g, sign});
  }
  return w;
}

}  // namespace

ParsedPresentation parse_presentation(const std::string& text) {
  ParsedPresentation out;
  Presentation& p = out.pres;
  bool have_gens = false;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "sig:") {
      if (toks.size() != 2)
        throw ParseError(ParseError::Kind::BadFormat, "presentation: bad sig line");
      auto s = sig_from_name(toks[1]);
      if (!s)
        throw ParseError(ParseError::Kind::UnknownSymbol,
                         "presentation: unknown signature '" + toks[1] + "'");
      p.sig = *s;
      continue;
    }
    if (toks[0] == "gens:") {
      p.gens.assign(toks.begin() + 1, toks.end());
      for (auto& g : p.gens)
        if (g == "1" || g == "=")
          throw ParseError(ParseError::Kind::BadFormat,
                           "presentation: reserved generator name '" + g + "'");
      std::set<std::string> uniq(p.gens.begin(), p.gens.end());
      if (uniq.size() != p.gens.size())
        throw ParseError(ParseError::Kind::BadFormat,
                         "presentation: duplicate generator name");
      have_gens = true;
      continue;
    }
    if (toks[0] == "map:") {
      std::vector<int> images;
      for (size_t i = 1; i < toks.size(); ++i) {
        try {
          images.push_back(std::stoi(toks[i]));
        } catch (...) {
          throw ParseError(ParseError::Kind::BadFormat, "presentation: bad map entry");
        }
      }
      out.images = std::move(images);
      continue;
    }
    if (!have_gens)
      throw ParseError(ParseError::Kind::BadFormat,
                       "presentation: relations before 'gens:' line");
    size_t eq = toks.size();
    for (size_t i = 0; i < toks.size(); ++i)
      if (toks[i] == "=") {
        eq = i;
        break;
      }
    Relation r;
    r.lhs = parse_word_tokens(p, toks, 0, eq);
    if (eq < toks.size()) r.rhs = parse_word_tokens(p, toks, eq + 1, toks.size());
    p.rels.push_back(std::move(r));
  }
  if (!have_gens)
    throw ParseError(ParseError::Kind::BadFormat, "presentation: missing 'gens:' line");
  if (out.images && out.images->size() != p.gens.size())
    throw ParseError(ParseError::Kind::BadFormat,
                     "presentation: map length does not match generators");
  return out;
}

}  // namespace eqkit
