#ifndef FRAMEKIT_DOCUMENT_HPP
#define FRAMEKIT_DOCUMENT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace framekit {

/// Interchange form of a bounded lattice: element names plus cover pairs
/// [lower, upper]. The element order fixes the index order everywhere else.
struct LatticeDocument {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
};

/// Parses the UTF-8 JSON form {"elements": [...], "covers": [[lo, hi], ...]}.
/// Throws ParseError on malformed text or shape, SemanticError on duplicate
/// names, dangling cover references, or cover cycles.
LatticeDocument parse_lattice_document(std::string_view text);

/// Document invariants alone (no lattice structure implied).
void validate_document(const LatticeDocument& doc);

/// Canonical bytes: elements in index order, covers sorted lexicographically.
std::string serialize_document(const LatticeDocument& doc);

} // namespace framekit

#endif
