#ifndef BETTIC_IO_HPP
#define BETTIC_IO_HPP

#include <string>

#include <json.hpp>

#include "bettic/complex.hpp"
#include "bettic/sperner.hpp"

namespace bettic {

// Interchange format for complexes: {"m": <int>, "facets": [[v,...],...]}
// with 1-based vertices; facets serialized sorted by (size, lex) so output
// is byte-stable.  The empty complex is {"m": 0, "facets": [[]]}.
nlohmann::json complex_to_json(const Complex& K);
Complex complex_from_json(const nlohmann::json& j, bool strict = false);

Complex read_complex_file(const std::string& path, bool strict = false);
void write_complex_file(const Complex& K, const std::string& path);

// Sperner families: {"ground": [v,...], "members": [[v,...],...]} with an
// optional "over": [v,...].
nlohmann::json family_to_json(const SpernerFamily& F);
SpernerFamily family_from_json(const nlohmann::json& j);
SpernerFamily read_family_file(const std::string& path);

std::string complex_to_string(const Complex& K); // serialized JSON, 2-space indent

} // namespace bettic

#endif
