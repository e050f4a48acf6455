// SPDX-License-Identifier: Apache-2.0
#include "morreylab/report.hpp"

#include <charconv>

#include <json.hpp>

namespace morrey {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string to_json_line(const CheckReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) params[key] = *v;
  };
  put("alpha", r.params.alpha);
  put("p1", r.params.p1);
  put("q1", r.params.q1);
  put("p2", r.params.p2);
  put("q2", r.params.q2);
  put("s", r.params.s);
  put("t", r.params.t);
  put("u", r.params.u);
  put("v", r.params.v);
  put("L", r.params.scale);
  nlohmann::ordered_json j = {{"check", r.check}, {"params", params},
                              {"ratio", r.ratio}, {"constant", r.constant},
                              {"pass", r.pass},   {"extent", r.extent},
                              {"gen", r.gen},     {"seed", r.seed}};
  return j.dump();
}

std::string csv_header() {
  return "check,alpha,p1,q1,p2,q2,s,t,E,G,seed,ratio,constant,pass";
}

std::string to_csv_line(const CheckReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  std::string line = r.check;
  line += ',' + opt(r.params.alpha) + ',' + opt(r.params.p1) + ',' +
          opt(r.params.q1) + ',' + opt(r.params.p2) + ',' + opt(r.params.q2) +
          ',' + opt(r.params.s) + ',' + opt(r.params.t);
  line += ',' + std::to_string(r.extent) + ',' + std::to_string(r.gen) + ',' +
          std::to_string(r.seed);
  line += ',' + format_double(r.ratio) + ',' + format_double(r.constant) + ',' +
          (r.pass ? std::string("1") : std::string("0"));
  return line;
}

}  // namespace morrey
