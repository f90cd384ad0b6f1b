#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "slopelab/blowup.hpp"
#include "slopelab/monomial.hpp"

namespace slopelab {

/// Malformed input file or argument (exit code 1 in the CLI).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Always "num/den" in lowest terms.
nlohmann::json rat_json(const Rat& r);
/// Accepts an integer or a string "n" / "n/d".
Rat rat_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json read_json_file(const std::string& path);

/// { "dim": n, "factors": [ { "pole": [..], "twist": ["1/2", ..], "rank": k } ] };
/// twist defaults to zeros and rank to 1.
GoodModel model_from_json(const nlohmann::json& j);
GoodModel load_model(const std::string& path);

/// { "dim": n, "Z": {"a": [..]}, "S": {"r": [..]}, "mode": "toric"|"abstract",
///   "steps": [ {"center": ["D1","D2"]} | {"alpha": [..], "epsS": [..], "epsE": [..]} ] }
BlowupScript script_from_json(const nlohmann::json& j);
BlowupScript load_script(const std::string& path);

/// "x1*x2^3" in dimension dim.
MonomialFunction parse_monomial(const std::string& text, std::size_t dim);

}  // namespace slopelab
