#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framechoice/choice_data.hpp"
#include "framechoice/errors.hpp"

namespace framechoice {

// One deterministic frame-dependent choice type: the framed versions of
// priority[0] > priority[1] > ... rank above every unframed utility, and the
// best unframed alternative is priority[default_index]. c(F) is the first
// priority member inside F, or the default when F misses all of them.
struct ChoiceType {
  std::vector<Alternative> priority;
  int default_index = 0;  // 0-based position inside priority

  Alternative default_alternative() const { return priority.at(static_cast<std::size_t>(default_index)); }
  bool operator==(const ChoiceType&) const = default;
};

// Canonical order: by length, then lexicographic priority, then default index.
bool operator<(const ChoiceType& a, const ChoiceType& b);

// Throws PreconditionError when entries repeat, fall outside 0..n-1, or the
// default index is out of range.
void check_choice_type(const ChoiceType& t, int n);

Alternative evaluate_type(const ChoiceType& t, Frame f);

// Frame-dependent utility: U_F(x) = u(x) + v(x) when x is framed, u(x) otherwise.
struct FumRepresentation {
  std::vector<double> u;
  std::vector<double> v;  // v >= 0
};

// argmax_x U_F(x). Throws ModelError("non-injective utility") on a tie.
Alternative evaluate_fum(const FumRepresentation& rep, Frame f);

struct IifaWitness {
  Frame larger;   // F
  Frame smaller;  // F' subset of F
  std::string axiom;  // "IIFA1" or "IIFA2"
  std::string explanation;
};

struct AxiomReport {
  bool iifa1 = true;
  bool iifa2 = true;
  bool iifa() const { return iifa1 && iifa2; }
  std::vector<IifaWitness> witnesses;
};

// Checks both axioms on every observed pair F' subset-of F.
AxiomReport check_iifa(const DeterministicChoiceData& c);

// Raised by build_fum_representation when the data violates the axioms or
// no type is consistent with partial data.
class IifaViolation : public ModelError {
 public:
  IifaViolation(const std::string& what, AxiomReport report)
      : ModelError(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

enum class FumMethod { kRevealedOrder, kTypeSearch };

struct FumFit {
  FumRepresentation rep;
  FumMethod method = FumMethod::kRevealedOrder;
  // Set for kTypeSearch: the consistent type that was realized.
  std::optional<ChoiceType> type;
  // Ranked elements of X ∪ X* from best to worst; element x >= 0 is the
  // unframed x, element -(x+1) is the framed x*. Empty for kTypeSearch.
  std::vector<int> order;
};

// When every frame with |F| <= 3 is observed: revealed relation over X ∪ X*,
// asymmetry check, transitive closure, deterministic completion, integer
// utilities by rank. Otherwise (n <= 8): search enumerate_types for a type
// consistent with the observations and realize it.
FumFit build_fum_representation(const DeterministicChoiceData& c);

// A representation whose choice function is t.
FumRepresentation realize_type(const ChoiceType& t, int n);

inline constexpr int kMaxEnumerationSize = 8;

// All distinct FUM choice types in canonical order. Throws PreconditionError
// for n > kMaxEnumerationSize.
std::vector<ChoiceType> enumerate_types(int n);
// sum_{i=1..n} i! * C(n,i) * i
std::uint64_t type_count(int n);

struct RepEquivalence {
  bool same_argmax = false;          // clause (i)
  bool same_lower_contour = false;   // clause (ii)
  bool same_upper_order = false;     // clause (iii)
  bool same_choices = false;         // induced choice functions agree on 2^X
  bool equivalent() const { return same_argmax && same_lower_contour && same_upper_order; }
  std::vector<std::string> notes;
};

RepEquivalence check_rep_equivalence(const FumRepresentation& r1, const FumRepresentation& r2);

// Choice rule induced by a type on the given frames.
DeterministicChoiceData tabulate(const ChoiceType& t, const Universe& universe,
                                 const std::vector<Frame>& frames);

// "[a,b]->a" style label.
std::string describe(const ChoiceType& t, const Universe& universe);

}  // namespace framechoice
