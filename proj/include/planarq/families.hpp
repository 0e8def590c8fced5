#pragma once

// Known planar families over F_{p^n}, with their published side conditions.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planarq/gf.hpp"
#include "planarq/planarity.hpp"

namespace planarq::families {

using Poly = planar::SparsePoly<gf::GaloisField>;

struct FamilyInfo {
  std::string id;          // T2.1 .. T2.6, T3.1 .. T3.5
  std::string polynomial;  // as a formula in x
  std::string field;       // ambient field in terms of the parameters
  std::vector<std::string> parameters;
  std::vector<std::string> conditions;
};

/// The eleven catalogued families, in id order.
const std::vector<FamilyInfo>& catalog();
const FamilyInfo& family_info(std::string_view id);

/// Integer parameters and optional element parameters (canonical codes in the
/// ambient field). Missing element parameters are searched in code order.
struct FamilySpec {
  std::string id;
  std::optional<std::uint32_t> p, n, m, k, s, e;
  std::optional<std::uint32_t> u, v, omega, beta;
};

/// Small admissible parameters for each family.
FamilySpec default_spec(std::string_view id);

/// Ambient field F_{p^d} as (p, d).
std::pair<std::uint32_t, unsigned> ambient(const FamilySpec& spec);

/// The spec with every parameter it needs filled in. Integer parameters come
/// from the field where it determines them, else from the defaults; element
/// parameters are searched in `field` in code order.
FamilySpec resolve(const FamilySpec& spec, const gf::GaloisField& field);

/// Names of the violated conditions; empty iff all hold.
std::vector<std::string> validate_family(const FamilySpec& spec);

/// Throws ValidationFailed or FieldMismatch.
Poly instantiate_family(const FamilySpec& spec, const gf::GaloisField& field);

/// Throws SizeLimit when the field order exceeds `limits`.
bool brute_check_family(const FamilySpec& spec, const gf::GaloisField& field, const gf::SizeLimits& limits);

struct FamilyCheck {
  FamilySpec spec;  // resolved
  std::string field;
  std::uint64_t order = 0;
  std::vector<std::string> violations;
  std::string polynomial;  // instantiated, exponents reduced
  std::optional<bool> planar;
  bool desk_verifiable = false;
  bool flagged = false;  // validates but fails brute force
  std::string status() const;
};

/// Validates, instantiates and brute-checks when the field order is within `brute_budget`.
FamilyCheck check_family(const FamilySpec& spec, std::uint64_t brute_budget = 20000);

std::string to_string(const Poly& f);

}  // namespace planarq::families
