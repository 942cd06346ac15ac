#ifndef ILC_SERVICE_HPP_
#define ILC_SERVICE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "ilc/json.hpp"

namespace ilc {

inline constexpr int kDefaultPort = 7411;
inline constexpr std::uint64_t kDefaultServiceFuel = 100000;

struct Response {
  int status = 200;
  Json body;
};

// Handles one POST request without touching the network. Terms and deltas
// in the request may be given as JSON nodes or as concrete-syntax strings.
Response handle_request(std::string_view path, std::string_view body);

// Serves handle_request() over HTTP until the process is stopped. Returns
// false if the port could not be bound.
bool serve(const std::string& host, int port);

}  // namespace ilc

#endif  // ILC_SERVICE_HPP_
