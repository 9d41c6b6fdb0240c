#pragma once

#include "gbsknot/graph.hpp"
#include "gbsknot/modular.hpp"
#include "gbsknot/moves.hpp"
#include "gbsknot/presentation.hpp"
#include "gbsknot/word.hpp"
#include "gbsknot/words.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gbsknot {

/// First pair (l_i, k_j) of a segment that shares a factor. Indices are
/// 1-based as in the segment picture.
struct CoprimeViolation {
  std::size_t l_index;
  std::size_t k_index;
  Integer l;
  Integer k;
};

struct CoprimeCheck {
  bool ok = true;
  std::optional<CoprimeViolation> violation;
};

/// gcd(|l_i|, |k_j|) = 1 for all i, j, including i = j.
CoprimeCheck segment_coprime_check(const SegmentView& view);

struct CycleCheck {
  bool ok = false;
  /// |prod k_i - prod l_i| = 1 on signed labels.
  bool strict = false;
  /// ||prod k_i| - |prod l_i|| = 1 and the abelianization is Z.
  bool lenient = false;
  Integer k_product;
  Integer l_product;
  std::string reason;
};

/// Pairwise coprime k_i, l_j and |prod k_i - prod l_i| = 1. `ok` follows
/// the strict test; both variants are reported.
CycleCheck cycle_knot_check(const CycleView& view);

/// One step of eliminating the interior generators of a segment:
/// alpha * (l_1...l_{i-1}) + beta * k_i = 1 and
/// a_i = a_1^(alpha k_1...k_{i-1}) a_{i+1}^(beta l_i).
struct EliminationStep {
  std::string generator;
  Integer alpha;
  Integer beta;
  Word step_word;  // over a_1 and a_{i+1}
  Word word;       // over a_1 and a_{s+1}
};

/// Homomorphism from T(k,l) or BS(k,l) into the group of a graph, with the
/// images of the source generators and its verification status.
struct Witness {
  std::string source;  // "T(10,21)", "BS(2,3)"
  std::vector<std::string> source_generators;
  std::vector<Word> source_relators;
  std::map<std::string, Word> images;
  std::vector<EliminationStep> elimination;
  bool verified = false;
};

/// Segment a_1..a_{s+1}: x -> a_1, y -> a_{s+1} from T(prod k_i, prod l_i),
/// plus an expression of every interior a_i through a_1 and a_{s+1}.
/// Throws PreconditionFailed when the coprimality check fails.
Witness torus_witness(const SegmentView& view, WordEngineOptions options = {});

/// Cycle with k = prod k_i, l = prod l_i, both different from +-1:
/// a -> a_1, r -> s [a_1, s] from BS(k,l), where s is the stable letter
/// oriented along the cycle. Tries both commutator conventions and keeps
/// the one that verifies. Throws PreconditionFailed.
Witness bs_embedding_witness(const CycleView& view, WordEngineOptions options = {});

/// The identity map BS(k,l) -> loop (k,l), used when k or l is +-1.
Witness loop_identity_witness(const CycleView& view, WordEngineOptions options = {});

enum class Status { Yes, No, Unknot };

std::string_view name(Status status);

struct OneKnotVerdict {
  Status status = Status::No;
  Integer p;
  Integer q;
  bool both_prime = false;
  std::string reason;
};

enum class ImageSource { TorusImage, BSImage };

std::string_view name(ImageSource source);

struct NKnotVerdict {
  Status status = Status::No;
  ImageSource source = ImageSource::TorusImage;
  Integer k;
  Integer l;
  std::string reason;
  std::vector<Witness> witnesses;
};

struct ClassifyOptions {
  WordEngineOptions words;
};

/// Knot-group status of a labeled graph's fundamental group, decided on
/// its reduced form, with the invariants used along the way.
struct KnotVerdict {
  OneKnotVerdict one_knot;
  NKnotVerdict n_knot;
  std::optional<ExceptionalGroup> exceptional;
  LabeledGraph reduced;
  Shape shape;
  std::size_t betti1 = 0;
  AbelianStructure abelianization;
  ModularImage modular;
  std::optional<CycleCheck> cycle_check;
  std::optional<CoprimeCheck> coprime_check;

  bool is_knot_group() const {
    return one_knot.status != Status::No || n_knot.status != Status::No;
  }
};

OneKnotVerdict classify_1knot(const LabeledGraph& graph, ClassifyOptions options = {});
NKnotVerdict classify_nknot(const LabeledGraph& graph, ClassifyOptions options = {});
KnotVerdict classify(const LabeledGraph& graph, ClassifyOptions options = {});

}  // namespace gbsknot
