#include "qheis/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qheis {

using Json = nlohmann::ordered_json;

const char *to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::SkippedDegenerate:
    return "skipped-degenerate";
  }
  return "?";
}

Status parse_status(const std::string &s) {
  if (s == "pass")
    return Status::Pass;
  if (s == "fail")
    return Status::Fail;
  if (s == "skipped-degenerate")
    return Status::SkippedDegenerate;
  throw std::invalid_argument("unknown status '" + s + "'");
}

std::string to_string(const Tuple &t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      out += ", ";
    out += t[i].first + "=" + std::to_string(t[i].second);
  }
  return out + ")";
}

Summary Report::summary() const {
  Summary s;
  for (const Entry &e : entries) {
    switch (e.status) {
    case Status::Pass:
      ++s.pass;
      break;
    case Status::Fail:
      ++s.fail;
      break;
    case Status::SkippedDegenerate:
      ++s.skipped;
      break;
    }
  }
  return s;
}

std::string to_json(const Report &r, int indent) {
  Json j;
  j["suite"] = r.suite;
  j["q"] = r.q;
  j["bounds"] = Json::object();
  for (const auto &[k, v] : r.bounds)
    j["bounds"][k] = v;
  j["entries"] = Json::array();
  for (const Entry &e : r.entries) {
    Json tuple = Json::object();
    for (const auto &[k, v] : e.tuple)
      tuple[k] = v;
    j["entries"].push_back(Json{{"check", e.check},
                                {"tuple", tuple},
                                {"status", to_string(e.status)},
                                {"lhs", e.lhs},
                                {"rhs", e.rhs},
                                {"residual", e.residual}});
  }
  const Summary s = r.summary();
  j["summary"] = Json{{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
  return j.dump(indent);
}

Report report_from_json(const std::string &text) {
  try {
    const Json j = Json::parse(text);
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.q = j.at("q").get<std::string>();
    for (const auto &[k, v] : j.at("bounds").items())
      r.bounds[k] = v.get<long>();
    for (const Json &e : j.at("entries")) {
      Entry entry;
      entry.check = e.at("check").get<std::string>();
      for (const auto &[k, v] : e.at("tuple").items())
        entry.tuple.emplace_back(k, v.get<long>());
      entry.status = parse_status(e.at("status").get<std::string>());
      entry.lhs = e.at("lhs").get<std::string>();
      entry.rhs = e.at("rhs").get<std::string>();
      entry.residual = e.at("residual").get<std::string>();
      r.entries.push_back(std::move(entry));
    }
    return r;
  } catch (const nlohmann::json::exception &ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
}

std::string to_text(const Report &r, bool verbose) {
  std::ostringstream out;
  out << "suite " << r.suite << "  q=" << r.q << "  bounds:";
  for (const auto &[k, v] : r.bounds)
    out << ' ' << k << '=' << v;
  out << '\n';
  for (const Entry &e : r.entries) {
    const bool detail = e.status == Status::Fail || verbose;
    if (!detail && e.status == Status::Pass)
      continue;
    out << to_string(e.status) << "  " << e.check << ' ' << to_string(e.tuple) << '\n';
    if (detail && e.status != Status::SkippedDegenerate) {
      out << "    lhs: " << e.lhs << '\n' << "    rhs: " << e.rhs << '\n';
      if (!e.residual.empty())
        out << "    residual: " << e.residual << '\n';
    }
  }
  const Summary s = r.summary();
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
  return out.str();
}

} // namespace qheis
