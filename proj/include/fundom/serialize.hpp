#pragma once

#include <string>

#include "fundom/actions.hpp"

namespace fundom {

/// Parses a group/action spec from JSON text. Accepted forms:
///   {"degree": n, "generators": ["(1 2)(3 4)", ...]}
///   {"kind": "symmetric"|"alternating"|"cyclic"|"dihedral", "degree": n}
///   {"kind": "generators", "degree": n, "generators": [...]}
///   {"tensor": [spec, ...]}        factors are group specs
///   {"direct_sum": [spec, ...]}    factors are arbitrary specs
/// Throws InvalidArgument on malformed input.
ActionSpec parse_action_spec(const std::string& json_text);

/// Canonical JSON rendering of a spec (inverse of parse_action_spec up to
/// formatting).
std::string action_spec_to_json(const ActionSpec& spec);

/// {"degree": n, "images": [...]} with 1-indexed images.
std::string perm_to_json(const Perm& p);
Perm perm_from_json(const std::string& json_text);

}  // namespace fundom
