#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsc/construct.hpp"
#include "qsc/cyclic.hpp"

namespace qsc {

// All machine output goes through nlohmann's ordered_json so that repeated
// runs are byte-identical.
using ojson = nlohmann::ordered_json;

ojson meta_block(const AlgebraContext& ctx);

ojson coset_table_json(const CosetTable& t);
ojson code_json(const AlgebraContext& ctx, const CyclicCode& C);
ojson dual_cert_json(const AlgebraContext& ctx, const DualContainingCert& cert);
ojson distance_json(const DistanceResult& d);
ojson pair_json(const AlgebraContext& ctx, const AugmentedPair& pair);
ojson sync_json(const AlgebraContext& ctx, const SyncCertificate& sync);
ojson qsc_json(const QscParams& p);
ojson theorem1_json(const AlgebraContext& ctx, const Theorem1Result& r);

// Wraps a result in the standard envelope {meta, result, certificates}.
ojson envelope(const AlgebraContext& ctx, ojson result, ojson certificates);

// CSV rendering: flattens one-level-deep JSON objects or arrays of such
// objects into header + rows. Nested values are serialized inline.
std::string to_csv(const ojson& rows);

} // namespace qsc
