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

#include <atomic>
#include <chrono>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "diasexp/service.h"
#include "doctest.h"
#include "httplib.h"
#include "test_util.h"

namespace diasexp {
namespace {

using json = nlohmann::ordered_json;
using testing::DataPath;
using testing::TempDir;

struct Fixture {
  TempDir dir;
  Service service{ServiceOptions{DataPath("stories"), Lexicon::Builtin()}};

  HttpReply Post(const std::string &path, const json &body = json::object(),
                 std::map<std::string, std::string> query = {}) {
    return service.Handle("POST", path, query, body.dump());
  }
  HttpReply Get(const std::string &path) { return service.Handle("GET", path, {}, ""); }
  std::string NewSession(std::map<std::string, std::string> query = {}) {
    HttpReply r = Post("/sessions", json::object(), std::move(query));
    REQUIRE(r.status == 201);
    return r.body["session_id"];
  }
};

TEST_CASE_FIXTURE(Fixture, "sessions") {
  HttpReply r = Post("/sessions");
  CHECK(r.status == 201);
  CHECK(r.body["records"] == 0);
  std::string id = r.body["session_id"];
  CHECK_FALSE(id.empty());
  CHECK(NewSession() != id);
  CHECK(service.session_count() == 2);

  r = Post("/sessions", json::object(), {{"story", "gold"}});
  CHECK(r.status == 201);
  CHECK(r.body["records"] == 25);
  CHECK(Post("/sessions", json::object(), {{"story", "missing"}}).status == 404);
  CHECK(Post("/sessions", json::object(), {{"story", "../gold"}}).status == 404);
  CHECK(Get("/sessions").status == 405);
  CHECK(Get("/nothing").status == 404);
}

TEST_CASE_FIXTURE(Fixture, "utterances") {
  std::string id = NewSession();
  HttpReply r = Post("/sessions/" + id + "/utterance", {{"text", "Elena este sociabilă mereu."}});
  REQUIRE(r.status == 200);
  CHECK(r.body["kind"] == "recorded");
  CHECK(r.body["record"]["when"] == "mereu");
  CHECK(r.body["record"]["seq"] == 1);
  CHECK(r.body["record"]["why"].is_null());

  r = Post("/sessions/" + id + "/utterance", {{"text", "mereu."}});
  CHECK(r.status == 422);
  CHECK(r.body["kind"] == "error");

  CHECK(Post("/sessions/" + id + "/utterance", {{"words", "x"}}).status == 400);
  CHECK(service.Handle("POST", "/sessions/" + id + "/utterance", {}, "{nope").status == 400);
  CHECK(Post("/sessions/unknown/utterance", {{"text", "x"}}).status == 404);
  CHECK(Get("/sessions/" + id + "/utterance").status == 405);

  std::string gold = NewSession({{"story", "gold"}});
  r = Post("/sessions/" + gold + "/utterance", {{"text", "Cum este Elena?"}});
  REQUIRE(r.status == 200);
  CHECK(r.body["kind"] == "answers");
  CHECK(r.body["answers"].size() == 3);
}

TEST_CASE_FIXTURE(Fixture, "clarifications") {
  std::string id = NewSession();
  std::string base = "/sessions/" + id;
  CHECK(Post(base + "/clarify", {{"clarification_id", "c0-0"}, {"choice", 1}}).status == 409);

  HttpReply r = Post(base + "/utterance", {{"text", "Elena este prietena lui Adrian."}});
  REQUIRE(r.status == 200);
  REQUIRE(r.body["kind"] == "clarify");
  std::string cid = r.body["clarification"]["id"];
  CHECK(r.body["clarification"]["options"].size() == 2);
  CHECK(r.body["clarification"]["options"][0]["role"] == "indir_obj");

  CHECK(Post(base + "/utterance", {{"text", "Elena vine."}}).status == 409);
  CHECK(Post(base + "/clarify", {{"clarification_id", "zzz"}, {"choice", 1}}).status == 404);
  CHECK(Post(base + "/clarify", {{"clarification_id", cid}, {"choice", 5}}).status == 422);
  CHECK(Post(base + "/clarify", {{"clarification_id", cid}, {"choice", "why"}}).status == 422);
  CHECK(Post(base + "/clarify", {{"clarification_id", cid}}).status == 400);

  r = Post(base + "/clarify", {{"clarification_id", cid}, {"choice", 1}});
  REQUIRE(r.status == 200);
  CHECK(r.body["kind"] == "recorded");
  CHECK(r.body["record"]["indir_obj"] == "lui Adrian");

  r = Post(base + "/utterance", {{"text", "Adrian a pus cartea pe masă."}});
  REQUIRE(r.body["kind"] == "clarify");
  r = Post(base + "/clarify", {{"clarification_id", r.body["clarification"]["id"]}, {"choice", "When"}});
  CHECK(r.status == 200);
  CHECK(r.body["record"]["when"] == "pe masă");
}

TEST_CASE_FIXTURE(Fixture, "story and save") {
  std::string id = NewSession();
  HttpReply r = Get("/sessions/" + id + "/story");
  CHECK(r.status == 200);
  CHECK(r.body["records"].empty());
  CHECK(Get("/sessions/nope/story").status == 404);

  std::string gold = NewSession({{"story", "gold"}});
  r = Get("/sessions/" + gold + "/story");
  CHECK(r.body["records"].size() == 25);
  CHECK(r.body["records"][10]["indir_obj"] == "Elenei");

  Service writer{ServiceOptions{dir.path(), Lexicon::Builtin()}};
  HttpReply s = writer.Handle("POST", "/sessions", {}, "");
  std::string wid = s.body["session_id"];
  writer.Handle("POST", "/sessions/" + wid + "/utterance", {}, R"({"text":"Elena iubește pe Adrian."})");
  s = writer.Handle("POST", "/sessions/" + wid + "/save", {}, R"({"name":"mine"})");
  CHECK(s.status == 200);
  CHECK(LoadStory(dir / "mine.jsonl").size() == 1);
  CHECK(writer.Handle("POST", "/sessions/" + wid + "/save", {}, R"({"name":"../x"})").status == 400);
  s = writer.Handle("POST", "/sessions", {{"story", "mine"}}, "");
  CHECK(s.body["records"] == 1);
}

TEST_CASE_FIXTURE(Fixture, "concurrent requests on one session") {
  std::string id = NewSession();
  std::atomic<int> ok{0}, busy{0}, other{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 10; ++i) {
        HttpReply r = Post("/sessions/" + id + "/utterance",
                           {{"text", "Elena este sociabilă mereu."}});
        if (r.status == 200) {
          ++ok;
        } else if (r.status == 409) {
          ++busy;
        } else {
          ++other;
        }
      }
    });
  }
  for (auto &t : threads) t.join();
  CHECK(other == 0);
  CHECK(ok + busy == 80);
  HttpReply r = Get("/sessions/" + id + "/story");
  CHECK(r.body["records"].size() == static_cast<std::size_t>(ok.load()));
  std::set<int> seqs;
  for (const auto &rec : r.body["records"]) seqs.insert(rec["seq"].get<int>());
  CHECK(seqs.size() == static_cast<std::size_t>(ok.load()));
}

TEST_CASE_FIXTURE(Fixture, "over HTTP") {
  httplib::Server server;
  service.Mount(server);
  int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread th([&] { server.listen_after_bind(); });
  while (!server.is_running()) std::this_thread::sleep_for(std::chrono::milliseconds(5));

  httplib::Client cli("127.0.0.1", port);
  auto res = cli.Post("/sessions?story=gold", "", "application/json");
  REQUIRE(res);
  CHECK(res->status == 201);
  std::string id = json::parse(res->body)["session_id"];
  res = cli.Post("/sessions/" + id + "/utterance", R"({"text":"Ce va dărui Adrian Elenei?"})",
                 "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["answers"] == json::array({"Adrian va dărui Elenei o floare."}));
  CHECK(res->get_header_value("Content-Type").find("application/json") == 0);
  res = cli.Get("/sessions/" + id + "/story");
  REQUIRE(res);
  CHECK(json::parse(res->body)["records"].size() == 25);
  res = cli.Get("/sessions/nope/story");
  REQUIRE(res);
  CHECK(res->status == 404);

  server.stop();
  th.join();
}

}  // namespace
}  // namespace diasexp
