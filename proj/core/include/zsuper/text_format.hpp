#ifndef ZSUPER_TEXT_FORMAT_HPP
#define ZSUPER_TEXT_FORMAT_HPP

#include <string>
#include <string_view>
#include <variant>

#include <zsuper/atlas.hpp>
#include <zsuper/graded_series.hpp>
#include <zsuper/morphism.hpp>
#include <zsuper/split_model.hpp>
#include <zsuper/splitting.hpp>
#include <zsuper/variable_table.hpp>

// Text documents. Every document starts with a header line
//
//   atlas     <name> n=<n> convention=<zsp|parity|comm>
//   bundle    <name> n=<n> convention=<...>
//   morphism  <name> n=<n> convention=<...>
//   series    <name> n=<n> convention=<...>
//   splitting <name> n=<n> convention=<...> k=<k>
//
// followed by `vars name : (d1,...,dn), ...` lines (a zero degree declares
// a base coordinate) and kind-specific statements:
//
//   chart U V ...             overlap U V          triple U V W
//   transition U -> V { x' = x + theta^2; xi' = xi }
//   transition U -> V { x' = x; block (0,1) [ 1, x ; 0, 1 ] }   (bundles)
//   map { x' = ...; ... }                                          (morphism)
//   value <expression>                                            (series)
//   morphism U { x' = ...; ... }                                  (splitting)
//
// Statements end at a newline or `;`. `#` starts a comment. Coordinates
// omitted from a `{ ... }` block are mapped to themselves. Expressions use
// + - * ^ and parentheses, rational literals a/b and juxtaposition.
namespace zsuper::text
{

enum class document_kind { atlas, bundle, morphism, series, splitting };

struct morphism_document {
    std::string name;
    morphism map;
};

struct series_document {
    std::string name;
    graded_series value;
};

struct splitting_document {
    std::string name;
    table_ptr table;
    splitting_iso iso;
};

using document = std::variant<atlas, graded_bundle, morphism_document, series_document, splitting_document>;

document_kind detect_kind(std::string_view text);

atlas_data parse_atlas_data(std::string_view text);
atlas parse_atlas(std::string_view text);
graded_bundle parse_bundle(std::string_view text);
morphism_document parse_morphism(std::string_view text);
series_document parse_series(std::string_view text);
splitting_document parse_splitting(std::string_view text);
document parse(std::string_view text);

// A single expression over a table.
graded_series parse_expression(std::string_view expr, const table_ptr &table, cap_t cap = std::nullopt);

std::string print(const atlas &a);
std::string print(const atlas_data &a);
std::string print(const graded_bundle &b);
std::string print(const morphism_document &m);
std::string print(const series_document &s);
std::string print(const splitting_document &s);
std::string print(const document &d);

} // namespace zsuper::text

#endif
