#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "skernel/chain.hpp"
#include "skernel/hconstr.hpp"
#include "skernel/simpab.hpp"
#include "skernel/simpset.hpp"

// JSON documents for the three object kinds, maps between simplicial sets, and
// certificates. Every parse error is an InputError whose message starts with the
// location ("line 3, column 7" or "field d.2").
namespace skernel::io {

using Document = std::variant<ChainComplex, SimplicialSet, SimplicialAbGroup>;

ChainComplex parse_chain_complex(std::string_view text);
SimplicialSet parse_simplicial_set(std::string_view text);
SimplicialAbGroup parse_simplicial_ab_group(std::string_view text);
/// {"source": <set>, "target": <set>, "images": {"<cell>": "<word> <base>"}}
SimplicialMap parse_simplicial_map(std::string_view text);
/// Picks the schema from the keys present.
Document parse_document(std::string_view text);

std::string serialize(const ChainComplex& c);
std::string serialize(const SimplicialSet& x);
std::string serialize(const SimplicialAbGroup& a);
std::string serialize(const SimplicialMap& f);
std::string serialize(const WeqCertificate& cert);

/// Reads a whole file; InputError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace skernel::io
