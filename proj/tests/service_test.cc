#include "mutclass/service.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

#include "http_server.h"
#include "mutclass/io.h"
#include "mutclass/recognize.h"
#include "mutclass/verify.h"

namespace mutclass {
namespace {

using nlohmann::json;

json document(const Diagram& d) { return json::parse(serialize_document(d)); }

ServiceResponse post(const std::string& path, const json& body) {
  return handle_request("POST", path, body.dump());
}

json body_of(const ServiceResponse& r) { return json::parse(r.body); }

const char* kB2 = R"({"format_version":1,"vertices":[{"id":"0"},{"id":"1"}],
                      "edges":[{"tail":"0","head":"1","weight":2}]})";

TEST(ServiceTest, Health) {
  ServiceResponse r = handle_request("GET", "/v1/health", "");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r), json({{"status", "ok"}}));
  EXPECT_EQ(handle_request("POST", "/v1/health", "").status, 405);
  EXPECT_EQ(handle_request("GET", "/v1/classify", "").status, 405);
  EXPECT_EQ(handle_request("GET", "/v2/health", "").status, 404);
}

TEST(ServiceTest, ClassifyA3) {
  ServiceResponse r = post("/v1/classify", {{"diagram", document(dynkin_seed(TypeKind::kA, 3))}});
  ASSERT_EQ(r.status, 200) << r.body;
  json j = body_of(r);
  EXPECT_EQ(j["type"], "A");
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["family"], "A");
  EXPECT_TRUE(j["width"].is_null());
  EXPECT_TRUE(j["params"].empty());
}

TEST(ServiceTest, ClassifyReportsParamsAndWidth) {
  json j = body_of(post("/v1/classify", {{"diagram", document(dynkin_seed(TypeKind::kD1, 5))}}));
  EXPECT_EQ(j["type"], "D1");
  EXPECT_EQ(j["rank"], 5);
  EXPECT_EQ(j["width"], 0);
  Diagram cycle(5);
  cycle.add_edges(std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}, {2, 4}, {4, 1}});
  j = body_of(post("/v1/classify", {{"diagram", document(cycle)}}));
  EXPECT_EQ(j["params"]["n"], 3);
}

TEST(ServiceTest, ClassifyUnknown) {
  Diagram square(4);
  square.add_edges(std::vector<Edge>{{0, 1}, {2, 1}, {2, 3}, {0, 3}});
  ServiceResponse r = post("/v1/classify", {{"diagram", document(square)}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r)["type"], "Unknown");
}

TEST(ServiceTest, MutateB2) {
  ServiceResponse r = post("/v1/mutate", {{"diagram", json::parse(kB2)}, {"vertex", "0"}});
  ASSERT_EQ(r.status, 200) << r.body;
  json edges = body_of(r)["diagram"]["edges"];
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0]["tail"], "1");
  EXPECT_EQ(edges[0]["head"], "0");
  EXPECT_EQ(edges[0]["weight"], 2);
}

TEST(ServiceTest, MutateErrors) {
  EXPECT_EQ(post("/v1/mutate", {{"diagram", json::parse(kB2)}, {"vertex", "9"}}).status, 422);
  EXPECT_EQ(post("/v1/mutate", {{"diagram", json::parse(kB2)}, {"vertex", 0}}).status, 400);
  EXPECT_EQ(post("/v1/mutate", {{"diagram", json::parse(kB2)}}).status, 400);
}

TEST(ServiceTest, InvalidDiagramsAre400WithViolations) {
  json tri = {{"format_version", 1},
              {"vertices", {{{"id", "0"}}, {{"id", "1"}}, {{"id", "2"}}}},
              {"edges",
               {{{"tail", "0"}, {"head", "1"}, {"weight", 2}},
                {{"tail", "1"}, {"head", "2"}, {"weight", 1}},
                {{"tail", "2"}, {"head", "0"}, {"weight", 1}}}}};
  ServiceResponse r = post("/v1/classify", {{"diagram", tri}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(body_of(r)["violations"].size(), 1u);
  EXPECT_EQ(body_of(r)["violations"][0]["kind"], "non-square cycle");

  r = post("/v1/validate", {{"diagram", tri}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r)["violations"][0]["witness"].size(), 3u);
  r = post("/v1/validate", {{"diagram", json::parse(kB2)}});
  EXPECT_TRUE(body_of(r)["violations"].empty());

  json dup = json::parse(kB2);
  dup["vertices"].push_back({{"id", "0"}});
  r = post("/v1/validate", {{"diagram", dup}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(body_of(r)["field"], "diagram.vertices[2].id");

  EXPECT_EQ(handle_request("POST", "/v1/classify", "{not json").status, 400);
  EXPECT_EQ(handle_request("POST", "/v1/classify", "[]").status, 400);
  EXPECT_EQ(post("/v1/classify", {{"diagram", json::parse(kB2)}, {"extra", 1}}).status, 400);
}

TEST(ServiceTest, OrbitCensus) {
  ServiceResponse r = post("/v1/orbit", {{"diagram", document(dynkin_seed(TypeKind::kD, 4))}});
  ASSERT_EQ(r.status, 200) << r.body;
  json j = body_of(r);
  EXPECT_EQ(j["size"], 6);
  EXPECT_EQ(j["exhausted"], true);
  std::size_t total = 0;
  for (const auto& [name, count] : j["census"].items()) {
    EXPECT_EQ(name.rfind("D_", 0), 0u) << name;
    total += count.get<std::size_t>();
  }
  EXPECT_EQ(total, 6u);
}

TEST(ServiceTest, OrbitLimits) {
  json req = {{"diagram", document(dynkin_seed(TypeKind::kA, 6))},
              {"limits", {{"max_members", 5}}}};
  ServiceResponse r = post("/v1/orbit", req);
  EXPECT_EQ(r.status, 503);
  EXPECT_EQ(body_of(r)["exhausted"], false);
  req["limits"] = {{"max_members", 0}};
  EXPECT_EQ(post("/v1/orbit", req).status, 400);
  req["limits"] = {{"bogus", 1}};
  EXPECT_EQ(post("/v1/orbit", req).status, 400);

  ServiceOptions capped;
  capped.orbit_cap.max_members = 10;
  req["limits"] = {{"max_members", 1000}};
  EXPECT_EQ(handle_request("POST", "/v1/orbit", req.dump(), capped).status, 503);
}

std::vector<std::pair<std::string, std::string>> request_mix() {
  std::vector<std::pair<std::string, std::string>> out;
  for (TypeKind t : {TypeKind::kA, TypeKind::kB1, TypeKind::kD1}) {
    json d = document(dynkin_seed(t, 5));
    out.push_back({"/v1/classify", json({{"diagram", d}}).dump()});
    out.push_back({"/v1/mutate", json({{"diagram", d}, {"vertex", "2"}}).dump()});
    out.push_back({"/v1/validate", json({{"diagram", d}}).dump()});
    out.push_back({"/v1/orbit", json({{"diagram", d}}).dump()});
  }
  return out;
}

TEST(ServiceTest, ReplayIsPure) {
  auto mix = request_mix();
  std::vector<std::string> first;
  for (const auto& [path, body] : mix) first.push_back(handle_request("POST", path, body).body);
  std::mt19937_64 rng(4);
  std::vector<std::size_t> order(mix.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i : order) {
    EXPECT_EQ(handle_request("POST", mix[i].first, mix[i].second).body, first[i]);
  }
}

TEST(ServiceTest, ConcurrentRequestsAgree) {
  auto mix = request_mix();
  std::vector<std::string> expected;
  for (const auto& [path, body] : mix) expected.push_back(handle_request("POST", path, body).body);
  std::vector<std::vector<std::string>> got(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = 0; i < mix.size(); ++i) {
        std::size_t j = (i + t) % mix.size();
        got[t].push_back(handle_request("POST", mix[j].first, mix[j].second).body);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) {
    for (std::size_t i = 0; i < mix.size(); ++i) EXPECT_EQ(got[t][i], expected[(i + t) % mix.size()]);
  }
}

class LiveServer : public ::testing::Test {
 protected:
  void SetUp() override {
    mount_routes(server_, ServiceOptions{});
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(LiveServer, EndpointsOverHttp) {
  httplib::Client client("127.0.0.1", port_);
  auto health = client.Get("/v1/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(json::parse(health->body), json({{"status", "ok"}}));

  for (const auto& [path, body] : request_mix()) {
    auto res = client.Post(path, body, "application/json");
    ASSERT_TRUE(res) << path;
    ServiceResponse direct = handle_request("POST", path, body);
    EXPECT_EQ(res->status, direct.status) << path;
    EXPECT_EQ(res->body, direct.body) << path;
  }
  auto missing = client.Post("/v1/mutate", json({{"diagram", json::parse(kB2)}, {"vertex", "z"}}).dump(),
                             "application/json");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 422);
}

// A scripted explorer session: mutate twenty times through the service, then
// replay the recorded vertex sequence server-side from the base document.
TEST_F(LiveServer, ClickSessionReplays) {
  httplib::Client client("127.0.0.1", port_);
  Diagram base = dynkin_seed(TypeKind::kD1, 6);
  json current = document(base);
  std::vector<std::string> clicks;
  std::mt19937_64 rng(20);
  for (int step = 0; step < 20; ++step) {
    std::string v = std::to_string(rng() % base.size());
    auto res = client.Post("/v1/mutate", json({{"diagram", current}, {"vertex", v}}).dump(),
                           "application/json");
    ASSERT_TRUE(res);
    ASSERT_EQ(res->status, 200);
    current = json::parse(res->body)["diagram"];
    clicks.push_back(v);

    auto label = client.Post("/v1/classify", json({{"diagram", current}}).dump(), "application/json");
    ASSERT_TRUE(label);
    Classification fresh = classify(parse_document(current.dump()));
    EXPECT_EQ(json::parse(label->body)["name"], type_name(fresh.type));
    EXPECT_EQ(json::parse(label->body)["type"], "D1");
  }
  Diagram replay = base;
  for (const auto& v : clicks) replay = mutate(replay, v);
  EXPECT_EQ(document(replay), current);
}

TEST(AddressTest, Parse) {
  Address a = parse_address("0.0.0.0:9000");
  EXPECT_EQ(a.host, "0.0.0.0");
  EXPECT_EQ(a.port, 9000);
  EXPECT_THROW(parse_address("nohost"), std::invalid_argument);
  EXPECT_THROW(parse_address("h:99999"), std::invalid_argument);
  EXPECT_THROW(parse_address("h:x"), std::invalid_argument);
}

}  // namespace
}  // namespace mutclass
