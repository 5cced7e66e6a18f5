#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spectra/common.hpp"

namespace spectra {

/// A finite poset modeling a spectral space: points are primes, p <= q means
/// p is contained in q. Zariski closed sets are the up-closed sets (the
/// closure of {p} is everything above p); flat closed sets are the
/// down-closed sets.
struct SpecPoset {
  int n = 0;
  std::vector<uint8_t> leq;  // n*n; leq[i*n+j] != 0 means i <= j
  std::vector<std::string> names;

  bool le(int i, int j) const { return leq[i * n + j] != 0; }
  const std::string& name(int i) const { return names[i]; }

  std::vector<int> minimal_points() const;
  std::vector<int> maximal_points() const;

  /// Connected components of the comparability graph; component[i] is the
  /// component id of point i, ids dense from 0.
  std::vector<int> components() const;

  std::string literal() const;  // "poset{a<b, c}" form
};

/// Validates the partial-order axioms by full scan.
SpecPoset make_spec_poset(int n, const std::function<bool(int, int)>& le,
                          std::vector<std::string> names = {});

/// Builds the reflexive-transitive closure of the edges and validates
/// antisymmetry (a cycle is a construction error).
SpecPoset poset_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                           std::vector<std::string> names = {});

enum class Topology { zariski, flat };

/// One of the two topologies on a SpecPoset. Opens are the down-closed sets
/// (Zariski) or the up-closed sets (flat), as subsets encoded in bitmasks.
struct TopologyView {
  const SpecPoset* poset;
  Topology mode;

  bool is_open(uint32_t subset) const;
  bool is_closed(uint32_t subset) const;
  std::vector<uint32_t> opens() const;
  std::vector<uint32_t> clopens() const;
};

/// All unions of connected components, as bitmasks.
std::vector<uint32_t> component_unions(const SpecPoset& p);

/// Traces of the opens on the subspace `subspace` (masks are relative to the
/// full point set, contained in `subspace`), deduplicated and sorted.
std::vector<uint32_t> induced_opens(const SpecPoset& p, Topology mode,
                                    uint32_t subspace);

/// Continuity of g : P -> (subspace of P) by direct preimage computation:
/// the preimage of every induced open must be open in `mode`.
bool map_continuous(const SpecPoset& p, const std::vector<int>& g,
                    uint32_t subspace, Topology mode);

/// Non-isomorphic posets on exactly k points (1 <= k <= 6), canonically
/// labeled and sorted by canonical key.
std::vector<SpecPoset> enumerate_posets(int k);

/// Minimal adjacency-matrix key over all relabelings; equal keys mean
/// isomorphic posets.
uint64_t canonical_key(const SpecPoset& p);

/// The order dual (the combinatorial shadow of a prime-inverse ring).
/// Asserts the involution dual(dual(p)) == p.
SpecPoset prime_inverse(const SpecPoset& p);

struct PosetClaim {
  bool value = false;
  std::string witness;
};

struct ShapeFlags {
  PosetClaim mp_shape;        // unique minimal point below each point
  PosetClaim gelfand_shape;   // unique maximal point above each point
  PosetClaim zero_dim_shape;  // antichain
  PosetClaim purified_shape;  // distinct minimals in distinct components
  PosetClaim clean_shape;     // gelfand and distinct maximals in distinct components

  std::vector<std::pair<std::string, const PosetClaim*>> flag_list() const;
  std::map<std::string, bool> flag_values() const;
};

ShapeFlags shape_flags(const SpecPoset& p);

/// Outcome of a retraction computation. When the shape precondition fails,
/// `refused` is set with a witness point. Otherwise `image[i]` is the
/// retraction of point i, and the recorded continuity facts have been
/// verified by direct preimage computation (a failed assertion that theory
/// makes mandatory raises ConsistencyError instead).
struct PosetRetraction {
  bool refused = false;
  std::string refusal_witness;
  std::vector<int> image;
  bool flat_continuous = false;
  bool zariski_continuous = false;
};

/// Sends each point to its unique minimal point below (mp shape required;
/// otherwise a refusal naming a point over two minimals). Both continuity
/// assertions are mandatory and checked by direct preimage computation.
PosetRetraction min_retraction_poset(const SpecPoset& p);

/// Dual: unique maximal above (gelfand shape required). Zariski continuity
/// is mandatory; the flat-continuity verdict is computed by direct preimage
/// checking and double-checked against "Max is discrete in the induced
/// Zariski topology".
PosetRetraction max_retraction_poset(const SpecPoset& p);

/// Every retraction of the point set onto the minimal points (fixing them
/// pointwise), enumerated exhaustively.
std::vector<std::vector<int>> all_retractions_onto_min(const SpecPoset& p);

}  // namespace spectra
