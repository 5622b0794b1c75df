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

// HTTP/JSON sessions over the dialogue loop.
//
//   POST /sessions[?story=<name>]            -> 201 {"session_id", "records"}
//   POST /sessions/{id}/utterance {"text"}   -> 200 result
//   POST /sessions/{id}/clarify {"clarification_id", "choice"} -> 200 result
//   GET  /sessions/{id}/story                -> 200 {"records": [...]}
//   POST /sessions/{id}/save {"name"}        -> 200 {"saved": <name>}
//
// A result is {"kind": "recorded", "record"}, {"kind": "answers",
// "answers"}, {"kind": "clarify", "clarification"} or {"kind": "error",
// "message", "code"}. Errors: 400 bad body, 404 unknown session, story or
// clarification, 409 clarification pending or request in flight, 422
// invalid choice.

#ifndef DIASEXP_SERVICE_H_
#define DIASEXP_SERVICE_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "diasexp/dialogue.h"
#include "diasexp/lexicon.h"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace diasexp {

struct HttpReply {
  int status = 200;
  nlohmann::ordered_json body;
};

struct ServiceOptions {
  std::filesystem::path stories_dir;  // <name>.jsonl files
  Lexicon lexicon = Lexicon::Builtin();
};

class Service {
 public:
  explicit Service(ServiceOptions options);

  // Transport-free entry point. query holds the decoded URL parameters.
  HttpReply Handle(const std::string &method, const std::string &path,
                   const std::map<std::string, std::string> &query,
                   const std::string &body);

  // Routes every endpoint of the server to Handle.
  void Mount(httplib::Server &server);

  std::size_t session_count() const;

 private:
  struct Session {
    std::mutex mu;
    ReplState state;
    std::chrono::system_clock::time_point created;
  };

  HttpReply CreateSession(const std::map<std::string, std::string> &query);
  HttpReply Utterance(Session &s, const nlohmann::ordered_json &body);
  HttpReply Clarify(Session &s, const nlohmann::ordered_json &body);
  HttpReply GetStory(Session &s);
  HttpReply Save(Session &s, const nlohmann::ordered_json &body);
  std::shared_ptr<Session> Find(const std::string &id) const;
  std::string NewId();

  ServiceOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

// Shapes shared with the CLI.
nlohmann::ordered_json TurnToJson(const TurnResult &r);
nlohmann::ordered_json RecordToJson(const SentenceRecord &rec);

}  // namespace diasexp

#endif  // DIASEXP_SERVICE_H_
