#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/algebra.hpp"
#include "riesz/report.hpp"

namespace riesz {

using Pt = std::vector<long long>;

/// Positive cone of an integer po-group Z^d: either polyhedral (v in cone iff
/// A.v >= 0 componentwise) or the one-dimensional gapped cone
/// {n >= 0, n not excluded}.
struct ConeSpec {
  enum class Type { Polyhedral, IntegerGaps };
  Type type = Type::Polyhedral;
  int dim = 1;
  std::vector<Pt> inequalities;     // rows of A (polyhedral)
  std::vector<long long> excluded;  // positive integers (integer-gaps, d = 1)
};

struct PoGroup {
  ConeSpec cone;
  Pt unit;
  int dim() const { return cone.dim; }
};

/// Validates strictness (polyhedral: full column rank, else a box scan at the
/// given radius), additive closure for gapped cones, and unit > 0.
PoGroup make_pogroup(ConeSpec cone, Pt unit, long long strictness_radius = 8);

bool cone_contains(const PoGroup& g, const Pt& v);

std::string point_name(const Pt& v);

/// Interval effect algebra on G+[0, n*unit]. The carrier is enumerated inside
/// the exact bounding box of the rational interval polytope; an unbounded
/// polytope raises UnboundedInterval.
Algebra interval_effect_algebra(const PoGroup& g, int n,
                                int carrier_cap = kDefaultCarrierCap);

struct SssOptions {
  int max_summands = 64;
  long long node_limit = 1'000'000;
};

/// Is the target a sum of at most max_summands elements of G+[0,u]?
/// Breadth-first reachability over cone points below the target.
bool sss_membership(const PoGroup& g, const Pt& target,
                    const SssOptions& opt = {});

/// Group-level checks, each verified for every point of the lattice box
/// [-radius, radius]^d (the verdict's scope records the box). Witnesses are
/// the lexicographically least failing points.
PropertyReport is_strong_unit(const PoGroup& g, long long radius);
PropertyReport is_generative_unit(const PoGroup& g, long long radius,
                                  const SssOptions& opt = {});

/// Set equality G+[0,n*u] = n-fold sumset of G+[0,u]; on failure the witness
/// is the least missing interval element.
PropertyReport check_sumset_identity(const PoGroup& g, int n,
                                     int carrier_cap = kDefaultCarrierCap);

/// Under the n=2 sumset identity, the atom sets of [0,u] and [0,2u] agree.
PropertyReport interval_atoms_consistency(const PoGroup& g,
                                          int carrier_cap = kDefaultCarrierCap);

PropertyReport group_uarp_check(const PoGroup& g, long long radius);
PropertyReport group_rdp_check(const PoGroup& g, long long radius);
PropertyReport group_rip_check(const PoGroup& g, long long radius);

/// Targeted probes used for witness replay and acceptance checks.
bool group_rdp_split_exists(const PoGroup& g, const Pt& a, const Pt& b1,
                            const Pt& b2, long long radius);
bool group_rip_interpolant_exists(const PoGroup& g, const Pt& x1, const Pt& x2,
                                  const Pt& y1, const Pt& y2,
                                  long long radius);

bool replay_group(const PoGroup& g, const PropertyReport& r, long long radius);

/// Po-group file format: {"dim": d, "cone": {...}, "unit": [...]}.
PoGroup pogroup_from_json(const nlohmann::json& j);
nlohmann::json pogroup_to_json(const PoGroup& g);
PoGroup load_pogroup(const std::string& path);

namespace serial_ref {
PropertyReport group_rdp_check(const PoGroup& g, long long radius);
PropertyReport group_rip_check(const PoGroup& g, long long radius);
PropertyReport group_uarp_check(const PoGroup& g, long long radius);
}  // namespace serial_ref

}  // namespace riesz
