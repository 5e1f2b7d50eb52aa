#include "chow/dsl/report.hpp"

#include <algorithm>
#include <sstream>

#include "chow/errors.hpp"
#include "json.hpp"

namespace chow::dsl {

using ordered_json = nlohmann::ordered_json;

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

std::string Report::to_json(int indent) const {
  ordered_json j;
  j["version"] = version;
  j["selector"] = selector;
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json o;
    o["id"] = c.id;
    o["description"] = c.description;
    o["anchor"] = c.anchor;
    o["status"] = c.passed ? "pass" : "fail";
    o["expected"] = c.expected;
    o["actual"] = c.actual;
    j["checks"].push_back(std::move(o));
  }
  j["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(indent);
}

Report Report::from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    Report r;
    r.version = j.at("version").get<std::string>();
    r.selector = j.at("selector").get<std::string>();
    for (const auto& o : j.at("checks")) {
      Check c;
      c.id = o.at("id").get<std::string>();
      c.description = o.at("description").get<std::string>();
      c.anchor = o.at("anchor").get<std::string>();
      const auto status = o.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw Error("bad status '" + status + "'");
      c.passed = status == "pass";
      c.expected = o.at("expected").get<std::string>();
      c.actual = o.at("actual").get<std::string>();
      r.checks.push_back(std::move(c));
    }
    const auto& s = j.at("summary");
    if (s.at("total").get<std::size_t>() != r.checks.size() ||
        s.at("passed").get<std::size_t>() != r.passed() ||
        s.at("failed").get<std::size_t>() != r.failed()) {
      throw Error("summary does not match checks");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << version << "  [" << selector << "]\n";
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.description << '\n';
    if (!c.anchor.empty()) os << "     anchor:   " << c.anchor << '\n';
    os << "     expected: " << c.expected << '\n';
    os << "     actual:   " << c.actual << '\n';
  }
  os << checks.size() << " checks, " << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

}  // namespace chow::dsl
