#ifndef EQKIT_PRESENTATION_HPP
#define EQKIT_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqkit/group.hpp"

namespace eqkit {

// One generator occurrence, possibly inverted. `gen` indexes the owning
// presentation's generator list.
struct Literal {
  int gen;
  int sign;  // +1 or -1
  bool operator==(const Literal&) const = default;
};
using GroupWord = std::vector<Literal>;

GroupWord inverse_word(const GroupWord& w);

// Operation sets a presentation may be written in. Signatures without Inv
// admit no negative literals; signatures without One still write defining
// relations "w = 1" with an explicit identity generator (see
// translate_signature).
enum class Sig { MulInv1, Mul1, MulInv, Mul };

bool sig_has_inv(Sig s);
bool sig_has_one(Sig s);
std::string sig_name(Sig s);
std::optional<Sig> sig_from_name(const std::string&);

// A defining relation lhs = rhs. Empty rhs means "equals the identity";
// that is the only form group-presentation code produces, but signature
// translation into {*} needs genuine pairs.
struct Relation {
  GroupWord lhs, rhs;
  bool operator==(const Relation&) const = default;
};

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Relation> rels;
  Sig sig = Sig::MulInv1;

  int gen_index(const std::string& name) const;  // -1 if absent
};

// Number of generator occurrences in a relation (both sides).
int relation_length(const Relation& r);
// Sum of relation lengths plus the generator count.
long long total_length(const Presentation& p);

int eval_word(const FiniteGroup& g, const std::vector<int>& images, const GroupWord& w);

// Per-element minimal words over the generator images: breadth-first search
// on the Cayley graph of <images>, alphabet ordered g0, g0^-1, g1, ... with
// inverse letters only in signatures containing Inv. Ties resolve to the
// word reached first, i.e. shortest then lexicographically least in that
// alphabet order. Elements outside <images> get no word (nullopt).
std::vector<std::optional<GroupWord>> minimal_words(const FiniteGroup& g,
                                                    const std::vector<int>& images,
                                                    Sig sig);

// Presentation of a simple group: <a | a^p> for prime cyclic S (a mapped to
// the least non-identity element), otherwise the multiplication-table
// presentation with one generator per element and a relator g_x g_y g_xy^-1
// per pair. Throws SubgroupError::NotSimple.
struct BasePresentation {
  Presentation pres;
  std::vector<int> images;
};
BasePresentation base_presentation(const FiniteGroup& s);

// Presentation of M from presentations of a normal subgroup N (generators
// mapped into M) and of the quotient M/N (generators mapped to quotient
// elements, lifted through least coset representatives). Relations: the
// N-relations; w_ij b_i a_j^-1 b_i^-1 with w_ij a minimal a-word for
// b_i a_j b_i^-1; and u_i^-1 v_i with u_i a minimal a-word for the lift of
// the quotient relation v_i.
struct Lifted {
  Presentation pres;
  std::vector<int> images;  // into M
  int new_gens = 0;
  int new_rels = 0;
  int max_new_rellen = 0;
};
Lifted lift_presentation(const FiniteGroup& m, const std::vector<int>& n_elems,
                         const Presentation& pres_n, const std::vector<int>& images_n,
                         const Presentation& pres_q, const std::vector<int>& images_q);

// Stage-by-stage size accounting for a built presentation. Arrays are
// indexed by stage 1..stages (position 0 = stage 1). The cat_* fields are
// the catalog-wide constants the recurrences are stated against.
struct PresentationMetrics {
  int stages = 0;
  std::vector<int> gen, len, rel, rellen;
  int cat_gen = 0, cat_len = 0, cat_rel = 0, cat_rellen = 0;
  long long total = 0;

  // First violated recurrence as a human-readable tag, or nullopt.
  std::optional<std::string> violated_recurrence() const;
};

// Catalog of simple groups with fixed presentations, element words, and the
// worst-case element word length. Extended on demand by the builder.
struct CatalogEntry {
  FiniteGroup sample;
  Presentation pres;
  std::vector<int> images;
  std::vector<GroupWord> words;  // per element of sample
  int worst_len = 0;
};
struct SimpleCatalog {
  std::vector<CatalogEntry> entries;
  // Index of an entry isomorphic to s, creating one if needed.
  int locate(const FiniteGroup& s);
  int max_gens() const;
  int max_rels() const;
  int max_rellen() const;
  int max_word_len() const;
};
CatalogEntry make_catalog_entry(const FiniteGroup& s);

// Composition-series-driven presentation of an arbitrary finite group, with
// per-element words (each the a-part concatenated with the b-part fixed by
// the lifting construction, never re-minimised).
struct ShortPresentation {
  Presentation pres;
  std::vector<int> images;          // generator images in H
  std::vector<GroupWord> words;     // per element of H
  PresentationMetrics metrics;
  CompositionSeries series;
};
ShortPresentation build_short_presentation(const FiniteGroup& h, SimpleCatalog& catalog);

GroupWord express_element(const ShortPresentation& sp, int element);

// Coset enumeration over the trivial subgroup (HLT strategy with immediate
// coincidence handling). Returns the group order if the table closes within
// max_cosets total definitions, otherwise nullopt.
struct TCResult {
  std::optional<int> order;
  long long cosets_defined = 0;
};
TCResult todd_coxeter(const Presentation& p, int max_cosets);

// 20 * |target| unless overridden.
int default_max_cosets(int target_order);

struct VerifyResult {
  enum class Status { Verified, RelationFails, NotGenerating, OrderMismatch, Inconclusive };
  Status status = Status::Verified;
  std::string detail;
  bool ok() const { return status == Status::Verified; }
};
VerifyResult verify_presents(const Presentation& p, const std::vector<int>& images,
                             const FiniteGroup& target, int max_cosets = 0);

// Rewrites a presentation into a smaller signature. Dropping Inv doubles the
// alphabet with formal inverses named g' and adds relations g g' = 1;
// dropping One adds an identity generator e with relations g e = g and
// e g = g for every generator (including e), and rewrites empty right-hand
// sides to e. The presented group is unchanged.
struct TranslatedPresentation {
  Presentation pres;
  std::vector<int> images;           // translated generator images
  std::vector<int> source_gen;       // new gen -> old gen (-1 for e)
};
TranslatedPresentation translate_signature(const Presentation& p,
                                           const std::vector<int>& images,
                                           const FiniteGroup& target, Sig to);

// Word rewritten for a translated presentation: negative literals become the
// formal inverse generators; the empty word becomes [e] when One is dropped.
GroupWord translate_word(const TranslatedPresentation& t, const Presentation& original,
                         const GroupWord& w);

// Text format:
//   sig: mul_inv_1        (optional, default mul_inv_1)
//   gens: a b
//   map: 2 1              (optional generator images)
//   a a
//   a b a' b'
//   e a = a               (relation with explicit right-hand side)
// Literal tokens use a trailing ' for inversion in signatures with Inv; in
// other signatures a trailing ' is part of the generator name.
std::string presentation_text(const Presentation& p,
                              const std::vector<int>* images = nullptr);
struct ParsedPresentation {
  Presentation pres;
  std::optional<std::vector<int>> images;
};
ParsedPresentation parse_presentation(const std::string& text);

std::string word_text(const Presentation& p, const GroupWord& w);

}  // namespace eqkit

#endif
