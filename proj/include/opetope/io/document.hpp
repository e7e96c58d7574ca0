#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "opetope/codec/codec.hpp"
#include "opetope/core/morphism.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope::io {

inline constexpr std::string_view format_version = "1";

class VersionError : public std::runtime_error {
 public:
  explicit VersionError(const std::string& found)
      : std::runtime_error("unsupported format_version \"" + found + "\" (expected \"" + std::string(format_version) + "\")") {}
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DocumentKind { OpetopicSet, Boundary, PastingDiagram, OpetopeCode, Morphism };

std::string_view to_string(DocumentKind k) noexcept;

struct MorphismDocument {
  OpetopicGraph source;
  OpetopicGraph target;
  Morphism map;
};

struct Document {
  std::variant<OpetopicGraph, Boundary, PastingDiagram, OpetopeCode, MorphismDocument> payload;

  DocumentKind kind() const noexcept { return static_cast<DocumentKind>(payload.index()); }
};

// Throws ParseError (with line and column) on malformed text, unknown
// fields, duplicate ids and dangling references; VersionError when the
// version field is not the supported one.
Document parse_document(std::string_view text);

// Canonical layout: cells by degree then id, arrows by id, diamonds by the
// ids of their heterogeneous pair.
std::string serialize(const Document& doc);

Document load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const Document& doc);

// Reads an opetope out of an opetopic_set document (whose graph must have a
// terminal cell) or an opetope_code document.
Opetope as_opetope(const Document& doc);
PastingDiagram as_pasting_diagram(const Document& doc);
const OpetopicGraph& graph_of(const Document& doc);

}  // namespace opetope::io
