#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tll {

// The two modalities. U-typed values are freely duplicable and discardable,
// L-typed values must be used exactly once.
enum class Sort : uint8_t { U, L };

inline const char* sort_name(Sort s) { return s == Sort::U ? "U" : "L"; }

// A sort position in a term. Concrete almost everywhere; scheme bodies carry
// Var entries until instantiation, and use sites may carry Hole entries that
// elaboration resolves.
struct SortRef {
  enum class K : uint8_t { U, L, Var, Hole };
  K k = K::U;
  uint16_t id = 0;  // Var index or Hole id

  static SortRef of(Sort s) { return {s == Sort::U ? K::U : K::L, 0}; }
  static SortRef var(uint16_t i) { return {K::Var, i}; }
  static SortRef hole(uint16_t i) { return {K::Hole, i}; }

  bool concrete() const { return k == K::U || k == K::L; }
  Sort value() const { return k == K::U ? Sort::U : Sort::L; }
  std::optional<Sort> as_sort() const {
    if (concrete()) return value();
    return std::nullopt;
  }
  bool operator==(const SortRef& o) const { return k == o.k && (concrete() || id == o.id); }
  std::string str() const;
};

// Byte offsets into the source file a node was parsed from. Zero for
// synthesized nodes; substitution keeps the body's spans.
struct Span {
  uint32_t lo = 0, hi = 0;
  bool valid() const { return hi > lo; }
};

enum class Tag : uint8_t {
  Var,    // bound variable, de Bruijn index in num
  Sortt,  // a sort used as a term
  Pi,     // mode 0/1, kids = {dom, cod+1}
  Lam,    // mode 0/1, kids = {ann, body+1}
  App,    // kids = {fun, arg}
  Box,    // erasure marker
  Loc,    // heap location, id in num (machine-only)
  Hole,   // surface "_", elaborated away
  Meta,   // unification variable, local to one spine elaboration
  Id,     // kids = {type, lhs, rhs}
  Refl,   // kids = {m}
  IdElim, // kids = {motive+2, h, proof}, bnames = {x, p}
  Sig,    // mode 0/1, kids = {dom, cod+1}
  Pair,   // mode 0/1, kids = {fst, snd}
  SigElim,// mode 0/1, kids = {motive+1, scrut, branch+2}, bnames = {z, x, y}
  With,   // kids = {lhs, rhs}
  APair,  // kids = {lhs, rhs}
  ProjL,  // kids = {m}
  ProjR,  // kids = {m}
  Ind,    // inductive type ref: name, sorts, kids = param args
  Ctor,   // constructor ref: name, sorts, kids = field args
  Match,  // kids = {motive+1, scrut}, branches; bnames = {z}; Box motive once erased
  Def,    // top-level definition ref: name, sorts
  Name,   // unresolved surface name, resolved during checking
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct MatchBranch {
  std::string ctor;
  std::vector<std::string> fields;  // binder name hints, size = binder count
  TermPtr body;
};

struct Term {
  Tag tag = Tag::Box;
  uint8_t mode = 0;   // 0 = irrelevant flavor, 1 = relevant flavor
  SortRef sort{};     // Sortt value; t annotation of Pi/Lam/Sig/Pair/With/APair
  uint32_t num = 0;   // Var index, Loc id, Hole/Meta id
  std::string name;   // binder hint, or Ind/Ctor/Def/Name base name
  std::vector<std::string> bnames;     // extra binder hints (IdElim, SigElim, Match)
  std::vector<SortRef> sorts;          // scheme sort arguments
  std::vector<TermPtr> kids;
  std::vector<MatchBranch> branches;   // Match only
  Span span{};
};

// Factories. Terms are immutable once built; sharing subterms is fine.
TermPtr mk_var(uint32_t i, Span sp = {});
TermPtr mk_sort(SortRef s, Span sp = {});
TermPtr mk_sort(Sort s, Span sp = {});
TermPtr mk_pi(int mode, SortRef t, std::string x, TermPtr dom, TermPtr cod, Span sp = {});
TermPtr mk_lam(int mode, SortRef t, std::string x, TermPtr ann, TermPtr body, Span sp = {});
TermPtr mk_app(TermPtr f, TermPtr a, Span sp = {});
TermPtr mk_box(Span sp = {});
TermPtr mk_loc(uint32_t l, Span sp = {});
TermPtr mk_hole(uint32_t id, Span sp = {});
TermPtr mk_meta(uint32_t id, Span sp = {});
TermPtr mk_id(TermPtr ty, TermPtr lhs, TermPtr rhs, Span sp = {});
TermPtr mk_refl(TermPtr m, Span sp = {});
TermPtr mk_idelim(std::string x, std::string p, TermPtr motive, TermPtr h, TermPtr proof,
                  Span sp = {});
TermPtr mk_sig(int mode, SortRef t, std::string x, TermPtr dom, TermPtr cod, Span sp = {});
TermPtr mk_pair(int mode, SortRef t, TermPtr fst, TermPtr snd, Span sp = {});
TermPtr mk_sigelim(int mode, std::string z, TermPtr motive, TermPtr scrut, std::string x,
                   std::string y, TermPtr branch, Span sp = {});
TermPtr mk_with(SortRef t, TermPtr lhs, TermPtr rhs, Span sp = {});
TermPtr mk_apair(SortRef t, TermPtr lhs, TermPtr rhs, Span sp = {});
TermPtr mk_projl(TermPtr m, Span sp = {});
TermPtr mk_projr(TermPtr m, Span sp = {});
TermPtr mk_ind(std::string name, std::vector<SortRef> sorts, std::vector<TermPtr> args,
               Span sp = {});
TermPtr mk_ctor(std::string name, std::vector<SortRef> sorts, std::vector<TermPtr> args,
                Span sp = {});
TermPtr mk_match(std::string z, TermPtr motive, TermPtr scrut, std::vector<MatchBranch> brs,
                 Span sp = {});
TermPtr mk_def(std::string name, std::vector<SortRef> sorts, Span sp = {});
TermPtr mk_name(std::string name, std::vector<SortRef> sorts, Span sp = {});

// Number of binders kid i of t introduces.
int kid_binders(const Term& t, size_t i);

// Structural equality. Binder name hints and spans are ignored, so
// alpha-equivalent terms compare equal; global names and sort arguments are
// semantic and compared.
bool equal(const TermPtr& a, const TermPtr& b);

// Node count.
size_t term_size(const TermPtr& t);

// True if some Var with index >= depth occurs (i.e. the term is open).
bool has_free_above(const TermPtr& t, uint32_t depth);
inline bool is_closed(const TermPtr& t) { return !has_free_above(t, 0); }

bool contains_tag(const TermPtr& t, Tag tag);

// Shift free variables with index >= cutoff by d.
TermPtr shift(const TermPtr& t, int d, uint32_t cutoff = 0);

// Simultaneous substitution of the top k binders of `body` with args given in
// declaration order: the innermost binder (Var 0) receives args.back().
TermPtr instantiate(const TermPtr& body, std::span<const TermPtr> args);
TermPtr instantiate1(const TermPtr& body, const TermPtr& arg);

// Replace every Meta node by its solution (nullptr entries stay put) and every
// sort Hole by its concrete sort. Used by elaboration's final zonk pass.
struct MetaSolutions {
  std::vector<TermPtr> terms;       // meta id -> solution
  std::vector<std::optional<Sort>> sorts;  // sort hole id -> solution
};
TermPtr zonk(const TermPtr& t, const MetaSolutions& sol);
bool has_unsolved(const TermPtr& t);

// Substitute sort variables (SortRef::Var) with a concrete assignment; used by
// scheme instantiation.
TermPtr subst_sorts(const TermPtr& t, std::span<const Sort> assignment);

}  // namespace tll
