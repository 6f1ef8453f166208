#include "hookchar/fixtures.hpp"

#include "hookchar/error.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#ifndef HOOKCHAR_FIXTURE_DIR
#define HOOKCHAR_FIXTURE_DIR "data"
#endif

namespace hookchar {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

Json fixture_payload(const Fixture& fx) {
  Json pairings = Json::array();
  for (auto it = fx.pairings.rbegin(); it != fx.pairings.rend(); ++it)
    pairings.push_back({{"mu", to_json(it->first)}, {"expansion", to_json(it->second)}});
  return {{"n", fx.n}, {"pairings", pairings}};
}

Json fixture_document(const Fixture& fx) {
  Json payload = fixture_payload(fx);
  return {{"payload", payload}, {"sha256", sha256_hex(payload.dump())}};
}

Fixture fixture_from_document(const Json& doc) {
  if (!doc.is_object() || !doc.contains("payload") || !doc.contains("sha256"))
    throw ParseError("fixture document needs 'payload' and 'sha256'");
  const Json& payload = doc.at("payload");
  std::string want = doc.at("sha256").is_string() ? doc.at("sha256").get<std::string>() : "";
  std::string got = sha256_hex(payload.dump());
  if (want != got) throw ChecksumError("fixture checksum mismatch: stored " + want + ", computed " + got);
  Fixture fx;
  try {
    fx.n = payload.at("n").get<int>();
    for (const auto& entry : payload.at("pairings")) {
      Partition mu = partition_from_json(entry.at("mu"));
      if (mu.size() != fx.n) throw ParseError("fixture shape " + to_string(mu) + " has the wrong size");
      fx.pairings[mu] = expansion_from_json(entry.at("expansion"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture payload: ") + e.what());
  }
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixture file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("fixture file " + path + ": " + e.what());
  }
  return fixture_from_document(doc);
}

std::string default_fixture_path() { return std::string(HOOKCHAR_FIXTURE_DIR) + "/e44.json"; }

}  // namespace hookchar
