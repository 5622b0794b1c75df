// Copyright 2026 The DIASEXP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diasexp/service.h"

#include <cstdio>
#include <random>
#include <vector>

#include "diasexp/error.h"
#include "httplib.h"

namespace diasexp {

using json = nlohmann::ordered_json;

namespace {

HttpReply Fail(int status, const std::string &message) {
  json body;
  body["kind"] = "error";
  body["message"] = message;
  body["code"] = status;
  return {status, body};
}

std::vector<std::string> PathParts(const std::string &path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

bool ValidName(const std::string &name) {
  if (name.empty() || name.size() > 64) return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

json RecordToJson(const SentenceRecord &rec) {
  json j;
  j["seq"] = rec.seq;
  j["raw"] = rec.raw;
  j["predicative"] = rec.predicative;
  json triggers = json::object();
  for (Role r : kAllRoles) {
    std::string name(FieldName(r));
    if (rec.has(r)) {
      j[name] = rec.get(r)->text;
      if (!rec.get(r)->trigger.empty()) triggers[name] = rec.get(r)->trigger;
    } else {
      j[name] = nullptr;
    }
  }
  j["triggers"] = triggers;
  return j;
}

json TurnToJson(const TurnResult &r) {
  json j;
  switch (r.kind) {
    case TurnKind::kRecorded:
      j["kind"] = "recorded";
      j["record"] = RecordToJson(*r.record);
      break;
    case TurnKind::kAnswers:
      j["kind"] = "answers";
      j["answers"] = r.answers;
      break;
    case TurnKind::kClarify: {
      const Clarification &c = *r.clarification;
      j["kind"] = "clarify";
      json cj;
      cj["id"] = c.id;
      cj["words"] = c.words;
      cj["prompt"] = c.prompt;
      json options = json::array();
      for (std::size_t i = 0; i < c.options.size(); ++i) {
        json o;
        o["n"] = i + 1;
        o["role"] = FieldName(c.options[i]);
        o["label"] = RoleLabel(c.options[i]);
        options.push_back(o);
      }
      cj["options"] = options;
      j["clarification"] = cj;
      break;
    }
    case TurnKind::kError:
      j["kind"] = "error";
      j["message"] = r.message;
      j["code"] = 422;
      break;
  }
  return j;
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {}

std::size_t Service::session_count() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

std::string Service::NewId() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%016llx%04llx",
                static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(++counter_ & 0xffff));
  return buf;
}

std::shared_ptr<Service::Session> Service::Find(const std::string &id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpReply Service::Handle(const std::string &method, const std::string &path,
                          const std::map<std::string, std::string> &query,
                          const std::string &body) {
  std::vector<std::string> parts = PathParts(path);
  if (parts.empty() || parts[0] != "sessions") return Fail(404, "no such endpoint");
  if (parts.size() == 1) {
    if (method != "POST") return Fail(405, "use POST");
    return CreateSession(query);
  }
  auto session = Find(parts[1]);
  if (!session) return Fail(404, "unknown session " + parts[1]);
  if (parts.size() != 3) return Fail(404, "no such endpoint");
  const std::string &action = parts[2];

  std::unique_lock lock(session->mu, std::try_to_lock);
  if (!lock.owns_lock()) return Fail(409, "another request is in flight for this session");

  if (action == "story") {
    if (method != "GET") return Fail(405, "use GET");
    return GetStory(*session);
  }
  if (method != "POST") return Fail(405, "use POST");
  json j;
  try {
    j = body.empty() ? json::object() : json::parse(body);
  } catch (const json::parse_error &) {
    return Fail(400, "body is not valid JSON");
  }
  if (!j.is_object()) return Fail(400, "body must be a JSON object");
  if (action == "utterance") return Utterance(*session, j);
  if (action == "clarify") return Clarify(*session, j);
  if (action == "save") return Save(*session, j);
  return Fail(404, "no such endpoint");
}

HttpReply Service::CreateSession(const std::map<std::string, std::string> &query) {
  auto session = std::make_shared<Session>();
  session->created = std::chrono::system_clock::now();
  session->state.lexicon = options_.lexicon;
  if (auto it = query.find("story"); it != query.end()) {
    if (!ValidName(it->second)) return Fail(404, "unknown story " + it->second);
    std::filesystem::path p = options_.stories_dir / (it->second + ".jsonl");
    if (!std::filesystem::exists(p)) return Fail(404, "unknown story " + it->second);
    try {
      LoadInto(session->state, p);
    } catch (const Error &e) {
      return Fail(422, e.what());
    }
  }
  std::string id;
  {
    std::lock_guard lock(mu_);
    id = NewId();
    sessions_[id] = session;
  }
  json body;
  body["session_id"] = id;
  body["records"] = session->state.story.size();
  return {201, body};
}

HttpReply Service::Utterance(Session &s, const json &body) {
  if (!body.contains("text") || !body["text"].is_string()) {
    return Fail(400, "expected {\"text\": string}");
  }
  if (s.state.pending) return Fail(409, "a clarification is pending");
  TurnResult r = Say(s.state, body["text"].get<std::string>());
  if (r.kind == TurnKind::kError) return Fail(422, r.message);
  return {200, TurnToJson(r)};
}

HttpReply Service::Clarify(Session &s, const json &body) {
  if (!body.contains("clarification_id") || !body["clarification_id"].is_string() ||
      !body.contains("choice")) {
    return Fail(400, "expected {\"clarification_id\": string, \"choice\": n}");
  }
  std::string id = body["clarification_id"].get<std::string>();
  if (!s.state.pending) return Fail(409, "no clarification is pending");
  if (s.state.pending->pending->id != id) return Fail(404, "unknown clarification " + id);
  try {
    TurnResult r;
    const json &choice = body["choice"];
    if (choice.is_number_integer()) {
      r = ChooseNumber(s.state, id, choice.get<int>());
    } else if (choice.is_string()) {
      auto role = ParseRole(choice.get<std::string>());
      if (!role) return Fail(422, "unknown role " + choice.get<std::string>());
      r = Choose(s.state, id, *role);
    } else {
      return Fail(400, "choice must be an option number or a role name");
    }
    return {200, TurnToJson(r)};
  } catch (const UnknownClarification &e) {
    return Fail(404, e.what());
  } catch (const InvalidChoice &e) {
    return Fail(422, e.what());
  } catch (const Error &e) {
    return Fail(422, e.what());
  }
}

HttpReply Service::GetStory(Session &s) {
  json records = json::array();
  for (const SentenceRecord &rec : s.state.story.records()) {
    records.push_back(RecordToJson(rec));
  }
  json body;
  body["name"] = s.state.story.name();
  body["records"] = records;
  return {200, body};
}

HttpReply Service::Save(Session &s, const json &body) {
  if (!body.contains("name") || !body["name"].is_string() ||
      !ValidName(body["name"].get<std::string>())) {
    return Fail(400, "expected {\"name\": [A-Za-z0-9_-]+}");
  }
  std::string name = body["name"].get<std::string>();
  try {
    std::filesystem::create_directories(options_.stories_dir);
    SaveState(s.state, options_.stories_dir / (name + ".jsonl"));
  } catch (const Error &e) {
    return Fail(500, e.what());
  } catch (const std::filesystem::filesystem_error &e) {
    return Fail(500, e.what());
  }
  json out;
  out["saved"] = name;
  out["records"] = s.state.story.size();
  return {200, out};
}

void Service::Mount(httplib::Server &server) {
  auto handler = [this](const httplib::Request &req, httplib::Response &res) {
    std::map<std::string, std::string> query;
    for (const auto &[k, v] : req.params) query.emplace(k, v);
    HttpReply reply = Handle(req.method, req.path, query, req.body);
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json; charset=utf-8");
  };
  server.Post(R"(/sessions(/.*)?)", handler);
  server.Get(R"(/sessions(/.*)?)", handler);
}

}  // namespace diasexp
