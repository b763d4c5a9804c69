#pragma once

#include <string>
#include <vector>

#include "charfield/chartab.hpp"
#include "charfield/fields.hpp"
#include "charfield/groups.hpp"

namespace charfield {

/// Group specs: cyclic:n, dihedral:m, semidihedral:m, quaternion:m, sym:n,
/// alt:n, sl2:q, meta:n:k1,k2 and perm:(1,2)(3,4);(1,2,3). Orders m are group
/// orders. Throws std::invalid_argument on malformed input.
FiniteGroup parse_group(const std::string& spec);

enum class TableMethod { automatic, dixon, direct };

TableMethod parse_method(const std::string& name);

/// `direct` builds the table by Clifford theory and needs a cyclic:n or
/// meta: spec; `automatic` uses it when available and Dixon-Schneider otherwise.
CharacterTable table_for_spec(const std::string& spec, TableMethod method = TableMethod::automatic);

/// Field specs: cyclo:n, quad:d and fix:n:k1,k2 (fixed field of <k1,k2> in Q_n).
AbelianField parse_field(const std::string& spec);

/// Generated list of the default corpus.
std::vector<std::string> default_corpus();

/// Group specs from a text file, one per line; blank lines and lines
/// starting with '#' are skipped.
std::vector<std::string> load_corpus(const std::string& path);

/// Location of the shipped corpus file (data/default_corpus.txt).
std::string default_corpus_path();

}  // namespace charfield
