#include "ilc/service.hpp"

#include <httplib.h>

#include <array>

#include "ilc/algebra.hpp"
#include "ilc/syntax.hpp"

namespace ilc {

namespace {

class BadRequest : public Error {
 public:
  using Error::Error;
};

const Json& field(const Json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end()) throw BadRequest(std::string("missing field \"") + key + "\"");
  return *it;
}

Term term_field(const Json& req, const char* key) {
  const Json& j = field(req, key);
  return j.is_string() ? parse_term(j.get<std::string>()) : term_from_json(j);
}

Delta delta_field(const Json& req, const char* key) {
  const Json& j = field(req, key);
  return j.is_string() ? parse_delta(j.get<std::string>()) : delta_from_json(j);
}

std::uint64_t fuel_field(const Json& req) {
  auto it = req.find("fuel");
  if (it == req.end()) return kDefaultServiceFuel;
  if (!it->is_number_unsigned()) throw BadRequest("fuel must be a non-negative integer");
  return it->get<std::uint64_t>();
}

Json parse_error_json(const ParseError& e) {
  return {{"message", e.what()},
          {"line", e.line()},
          {"column", e.column()},
          {"expected", e.expected()},
          {"found", e.found()}};
}

Json eval_error_json(const DeltaEvalError& e) {
  return {{"message", e.what()},
          {"endpoint", endpoint_name(e.endpoint())},
          {"cause", e.cause() == DeltaEvalError::Cause::kStuck ? "stuck" : "out_of_fuel"},
          {"reason", e.reason()},
          {"at", to_json(e.at())}};
}

Json on_eval(const Json& req) {
  Term t = term_field(req, "term");
  FreshNameScope names;
  return {{"outcome", to_json(eval(t, fuel_field(req)))}};
}

Json on_delta_eval(const Json& req) {
  Delta d = delta_field(req, "delta");
  const std::uint64_t fuel = fuel_field(req);
  FreshNameScope names;
  Json out = {{"src", to_json(src(d))},
              {"tgt", to_json(tgt(d))},
              {"src_value", to_json(eval(src(d), fuel))},
              {"tgt_value", to_json(eval(tgt(d), fuel))}};
  try {
    out["value_delta"] = to_json(delta_eval(d, fuel));
  } catch (const DeltaEvalError& e) {
    out["error"] = eval_error_json(e);
  }
  return out;
}

Json on_diff(const Json& req) {
  return {{"delta", to_json(diff(term_field(req, "from"), term_field(req, "to")))}};
}

Json on_apply(const Json& req) {
  Term t = term_field(req, "term");
  Delta d = delta_field(req, "delta");
  try {
    return {{"term", to_json(apply(t, d))}};
  } catch (const EndpointMismatch& e) {
    return {{"error",
             {{"message", e.what()},
              {"expected_source", to_json(e.expected_source())},
              {"actual", to_json(e.actual())}}}};
  }
}

Json on_parse(const Json& req) {
  const Json& text = field(req, "text");
  if (!text.is_string()) throw BadRequest("text must be a string");
  std::string kind = "term";
  if (auto it = req.find("kind"); it != req.end() && it->is_string()) {
    kind = it->get<std::string>();
  }
  if (kind != "term" && kind != "delta") throw BadRequest("kind must be term or delta");
  try {
    if (kind == "term") return {{"ast", to_json(parse_term(text.get<std::string>()))}};
    return {{"ast", to_json(parse_delta(text.get<std::string>()))}};
  } catch (const ParseError& e) {
    return {{"error", parse_error_json(e)}};
  }
}

using Handler = Json (*)(const Json&);
constexpr std::array<std::pair<std::string_view, Handler>, 5> kRoutes = {{
    {"/eval", on_eval},
    {"/delta-eval", on_delta_eval},
    {"/diff", on_diff},
    {"/apply", on_apply},
    {"/parse", on_parse},
}};

}  // namespace

Response handle_request(std::string_view path, std::string_view body) {
  Handler handler = nullptr;
  for (const auto& [route, h] : kRoutes) {
    if (route == path) handler = h;
  }
  if (handler == nullptr) {
    return {404, {{"error", {{"message", "no such endpoint"}}}}};
  }
  Json req = Json::parse(body, nullptr, false);
  if (req.is_discarded() || !req.is_object()) {
    return {400, {{"error", {{"message", "request body must be a JSON object"}}}}};
  }
  try {
    return {200, handler(req)};
  } catch (const ParseError& e) {
    return {400, {{"error", parse_error_json(e)}}};
  } catch (const Error& e) {
    return {400, {{"error", {{"message", e.what()}}}}};
  }
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  for (const auto& [route, unused] : kRoutes) {
    (void)unused;
    server.Post(std::string(route),
                [path = std::string(route)](const httplib::Request& req,
                                            httplib::Response& res) {
                  Response r = handle_request(path, req.body);
                  res.status = r.status;
                  res.set_content(r.body.dump(), "application/json");
                });
  }
  return server.listen(host, port);
}

}  // namespace ilc
