#pragma once

#include "hookchar/schur.hpp"
#include "hookchar/serialize.hpp"
#include "hookchar/shapes.hpp"

#include <map>
#include <string>
#include <string_view>

namespace hookchar {

/// Stored pairings of the full character with s_mu, one per mu of n.
struct Fixture {
  int n = 0;
  std::map<Partition, SchurExpansion> pairings;
};

std::string sha256_hex(std::string_view data);

/// Canonical payload whose compact dump is checksummed.
Json fixture_payload(const Fixture& fx);
/// {"payload": ..., "sha256": ...}.
Json fixture_document(const Fixture& fx);

/// Reads and checks a fixture file; ChecksumError on mismatch.
Fixture load_fixture(const std::string& path);
Fixture fixture_from_document(const Json& doc);

std::string default_fixture_path();

}  // namespace hookchar
