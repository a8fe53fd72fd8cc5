#pragma once

// JSON reading and writing for group files, bundle files and reports.

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ekt/bordism.hpp"
#include "ekt/bundle.hpp"
#include "ekt/catalog.hpp"
#include "ekt/character.hpp"
#include "ekt/clifford.hpp"
#include "ekt/cyclotomic.hpp"

namespace ekt::io {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// Throws ParseError with the path in the message.
std::string read_file(const std::string& path);
json parse(const std::string& text, const std::string& origin);

// {"name", "degree", "generators": [[...]], "normal_subgroup_generators": [...]}
GroupSpec group_spec_from_json(const json& j);
json to_json(const GroupSpec& spec);

// {"e": order, "coeffs": [c_0, ..., c_{e-1}]} meaning sum c_k zeta_e^k; the
// coefficients are integers or "p/q" strings.
Cyclotomic cyclotomic_from_json(const json& j);
json to_json(const Cyclotomic& x);
json to_json(const ClassFunction& chi);

json to_json(const CharacterTable& t);
json to_json(const ObstructionRecord& r);
json to_json(const IrrOrbitRecord& r, const CharacterTable& table_a);
json to_json(const DecompositionReport& r);
json to_json(const PowerSeries& s);
json to_json(const GlobalSeries& s);
json to_json(const D2pReport& r);
json to_json(const VerificationReport& r);

struct BundleFile {
  GroupSpec spec;
  GroupPtr group;
  Subgroup normal;  // from the bundle file if given there, else from the group file
  EquivariantBundle bundle;
};

// "group" is a path relative to the bundle file or an inline group object.
// "base.action" holds one permutation per group generator. Each fiber entry gives the
// character at the point "orbit_rep", either as values on the classes of its
// stabilizer or as "irreducible_multiplicities" in table order. The first
// entry for an orbit defines the bundle; later entries for the same orbit are
// declarations checked by verify_decomposition.
BundleFile load_bundle(const std::string& path, std::size_t max_order = kDefaultMaxOrder);
BundleFile bundle_from_json(const json& j, const std::string& base_dir, std::size_t max_order);

// 64-bit FNV-1a, printed as 16 hex digits
std::string fnv1a_hex(std::string_view data);

}  // namespace ekt::io
