#include "hookchar/serialize.hpp"

#include "hookchar/error.hpp"

#include <charconv>

namespace hookchar {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [m, c] : p.terms()) arr.push_back({{"q", m.q}, {"t", m.t}, {"z", m.z}, {"c", c.str()}});
  return arr;
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const SchurExpansion& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"lambda", to_json(it->first)}, {"coeff", to_json(it->second)}});
  return {{"terms", terms}};
}

Json to_json(const LatticePath& g) { return {{"n", g.n()}, {"s", g.s()}, {"word", to_string(g)}}; }

Json to_json(const StdTableau& tau) { return {{"rows", tau.rows()}}; }

LaurentPoly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
    LaurentPoly p;
    for (const auto& term : j) {
      Monomial m{term.at("q").get<int>(), term.at("t").get<int>(), term.at("z").get<int>()};
      Integer c;
      try {
        c = Integer(term.at("c").get<std::string>());
      } catch (const std::runtime_error&) {
        throw ParseError("coefficient is not a decimal integer");
      }
      p.add_term(m, c);
    }
    return p;
  });
}

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] {
    try {
      return Partition(j.get<std::vector<int>>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

SchurExpansion expansion_from_json(const Json& j) {
  return guarded("expansion", [&] {
    SchurExpansion f;
    for (const auto& term : j.at("terms")) f.add(partition_from_json(term.at("lambda")), poly_from_json(term.at("coeff")));
    return f;
  });
}

LatticePath path_from_json(const Json& j) {
  return guarded("path", [&] {
    return LatticePath(j.at("n").get<int>(), j.at("s").get<int>(), j.at("word").get<std::string>());
  });
}

StdTableau tableau_from_json(const Json& j) {
  return guarded("tableau", [&] {
    try {
      return StdTableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

Partition parse_partition(std::string_view text) {
  try {
    return Partition(parse_int_list(text));
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed partition '") + std::string(text) + "': " + e.what());
  }
}

StdTableau parse_tableau(std::string_view text) {
  try {
    std::vector<std::vector<int>> rows;
    std::size_t start = 0;
    while (true) {
      std::size_t slash = text.find('/', start);
      rows.push_back(parse_int_list(text.substr(start, slash - start)));
      if (slash == std::string_view::npos) break;
      start = slash + 1;
    }
    return StdTableau::from_rows(rows);
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed tableau '") + std::string(text) + "': " + e.what());
  }
}

}  // namespace hookchar
