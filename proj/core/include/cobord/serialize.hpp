#pragma once

#include "cobord/geometry.hpp"
#include "cobord/partitions.hpp"
#include "cobord/rational.hpp"
#include "cobord/ring.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace cobord {

// Insertion-ordered JSON keeps output key order stable; together with the
// canonical rational strings this makes all emitted JSON byte-reproducible.
using Json = nlohmann::ordered_json;

struct PairingMatrix;

Json to_json(const Rational& q);  // canonical "p/q" string
Rational rational_from_json(const Json& j, const std::string& where);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j, const std::string& where);

Json to_json(const PartitionPair& p);
PartitionPair pair_from_json(const Json& j, const std::string& where);

Json to_json(const PartitionList& l);
PartitionList list_from_json(const Json& j, const std::string& where);

Json to_json(const MonomialIndex& q);
MonomialIndex monomial_from_json(const Json& j, const std::string& where);

Json to_json(const LinearForm& f);
LinearForm linear_form_from_json(const Json& j, const std::string& where);

Json to_json(const TruncatedPolynomial& p);  // [{"exponents":[...],"coeff":"p/q"}...]

Json to_json(const GeneratorSpec& g);
GeneratorSpec generator_from_json(const Json& j, const std::string& where);

Json to_json(const ClassSpec& c);
ClassSpec class_spec_from_json(const Json& j, const std::string& where);

Json to_json(const ChernVector& v);  // {"order":[...],"values":[...]}

Json to_json(const PairingMatrix& m);
PairingMatrix matrix_from_json(const Json& j, const std::string& where);

/// Canonical byte form: two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

Json parse_json_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace cobord
