#pragma once

#include <set>
#include <string>

#include "json.hpp"
#include "ppi/matrix.hpp"
#include "ppi/representation.hpp"
#include "ppi/toeplitz.hpp"
#include "ppi/verify.hpp"

namespace ppi::cli {

using Json = nlohmann::ordered_json;

/// Dense row-major; exact entries as strings ("1/2-i").
Json to_json(const QMatrix& m);
/// Dense row-major; entries as [re, im].
Json to_json(const toeplitz::Matrix& m);
/// {"k": [re, im]} with keys in increasing k.
Json to_json(const toeplitz::SymbolSeries& s);
Json to_json(const toeplitz::Decomposition& d);
Json to_json(const VerifyReport& r);
Json nv_json(const Rep& rep, unsigned n_max, const std::set<unsigned>& nv);

/// Accepts {"-1": [0, 1], "2": [3, 0]} or {"sampler": "exp", "fft": 1024}.
/// Throws std::invalid_argument on malformed input.
toeplitz::SymbolSeries symbol_from_json(const Json& j);

/// Two-space indented, trailing newline. Parsing this and dumping again is
/// byte-identical.
std::string dump(const Json& j);

std::string render_symbol(const toeplitz::SymbolSeries& s);
std::string render_matrix(const toeplitz::Matrix& m);
std::string render_matrix(const QMatrix& m);
std::string render_set(const std::set<unsigned>& s);

}  // namespace ppi::cli
