// Copyright 2026 The argproj Authors.
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

#include "argproj/review_server.h"

#include <httplib.h>

#include <charconv>

#include "argproj/conll.h"

namespace argproj {
namespace {

void SendJson(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, const std::string& message) {
  SendJson(res, status, {{"error", message}});
}

std::optional<std::size_t> ParseCount(const std::string& text) {
  std::size_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<SentenceClass> ParseSentenceClass(std::string_view text) {
  for (SentenceClass value :
       {SentenceClass::kFullO, SentenceClass::kFullComponent,
        SentenceClass::kPartial}) {
    if (ToString(value) == text) return value;
  }
  return std::nullopt;
}

}  // namespace

ReviewServer::ReviewServer(ReviewSession& session, ReviewServerOptions options)
    : session_(session),
      options_(std::move(options)),
      server_(std::make_unique<httplib::Server>()) {
  Routes();
}

ReviewServer::~ReviewServer() { Stop(); }

int ReviewServer::Bind(int port) {
  if (port == 0) return server_->bind_to_any_port(options_.host);
  return server_->bind_to_port(options_.host, port) ? port : -1;
}

bool ReviewServer::Run() { return server_->listen_after_bind(); }

void ReviewServer::Stop() {
  if (server_) server_->stop();
}

void ReviewServer::Routes() {
  server_->set_pre_routing_handler(
      [this](const httplib::Request& req, httplib::Response& res) {
        if (!options_.token.empty() &&
            req.get_header_value("X-Argproj-Token") != options_.token) {
          SendError(res, 401, "missing or wrong X-Argproj-Token");
          return httplib::Server::HandlerResponse::Handled;
        }
        return httplib::Server::HandlerResponse::Unhandled;
      });

  server_->set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        try {
          std::rethrow_exception(ep);
        } catch (const ReviewNotFound& e) {
          SendError(res, 404, e.what());
        } catch (const ReviewRejected& e) {
          SendError(res, 422, e.what());
        } catch (const ReviewConflict& e) {
          SendError(res, 409, e.what());
        } catch (const std::exception& e) {
          SendError(res, 500, e.what());
        }
      });

  server_->Get("/items", [this](const httplib::Request& req,
                                httplib::Response& res) {
    std::optional<ReviewStatus> status;
    std::optional<SentenceClass> outcome;
    std::size_t page = 1;
    std::size_t page_size = 20;
    if (req.has_param("status") && !req.get_param_value("status").empty()) {
      status = ParseReviewStatus(req.get_param_value("status"));
      if (!status) return SendError(res, 400, "unknown status filter");
    }
    if (req.has_param("class") && !req.get_param_value("class").empty()) {
      outcome = ParseSentenceClass(req.get_param_value("class"));
      if (!outcome) return SendError(res, 400, "unknown class filter");
    }
    if (req.has_param("page")) {
      const auto value = ParseCount(req.get_param_value("page"));
      if (!value || *value == 0) return SendError(res, 400, "bad page");
      page = *value;
    }
    if (req.has_param("page_size")) {
      const auto value = ParseCount(req.get_param_value("page_size"));
      if (!value || *value == 0 || *value > options_.max_page_size) {
        return SendError(res, 400, "bad page_size");
      }
      page_size = *value;
    }
    const ReviewPage result = session_.List(status, outcome, page, page_size);
    Json items = Json::array();
    for (const ReviewItem& item : result.items) items.push_back(ToJson(item));
    res.set_header("X-Total-Count", std::to_string(result.total));
    SendJson(res, 200,
             {{"items", items},
              {"page", result.page},
              {"page_size", result.page_size},
              {"total", result.total}});
  });

  server_->Get(R"(/items/(\d+))", [this](const httplib::Request& req,
                                         httplib::Response& res) {
    const auto id = ParseCount(req.matches[1]);
    if (!id) return SendError(res, 404, "no such item");
    SendJson(res, 200, ToJson(session_.Get(*id)));
  });

  server_->Post(R"(/items/(\d+)/correction)", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
    const auto id = ParseCount(req.matches[1]);
    if (!id) return SendError(res, 404, "no such item");
    Json body;
    try {
      body = Json::parse(req.body);
    } catch (const Json::exception&) {
      return SendError(res, 400, "body is not JSON");
    }
    if (body.is_object() && body.contains("spans")) body = body["spans"];
    if (!body.is_array()) {
      return SendError(res, 422, "expected an array of spans");
    }
    std::vector<Span> spans;
    try {
      for (const Json& span : body) spans.push_back(SpanFromJson(span));
    } catch (const ValidationError& e) {
      return SendError(res, 422, e.what());
    }
    SendJson(res, 200, ToJson(session_.Correct(*id, std::move(spans))));
  });

  server_->Post(R"(/items/(\d+)/skip)", [this](const httplib::Request& req,
                                               httplib::Response& res) {
    const auto id = ParseCount(req.matches[1]);
    if (!id) return SendError(res, 404, "no such item");
    SendJson(res, 200, ToJson(session_.Skip(*id)));
  });

  server_->Get("/export", [this](const httplib::Request& req,
                                 httplib::Response& res) {
    const ReviewExport exported = session_.WriteExport();
    const std::string conll = SerializeConll(exported.corpus);
    if (req.get_param_value("format") == "conll") {
      res.set_content(conll, "text/plain; charset=utf-8");
      return;
    }
    SendJson(res, 200, {{"conll", conll}, {"audit", ToJson(exported.audit)}});
  });
}

}  // namespace argproj
