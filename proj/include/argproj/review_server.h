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

// HTTP+JSON front of a ReviewSession.
//
//   GET  /items?status=&class=&page=&page_size=   queue page; X-Total-Count
//   GET  /items/{id}
//   POST /items/{id}/correction   body: [span...] or {"spans": [span...]}
//   POST /items/{id}/skip
//   GET  /export                  {"conll": ..., "audit": {...}}
//   GET  /export?format=conll     the corpus as text/plain
//
// A span is {"start": n, "end": n, "label": "Claim"|"Premise"|"MajorClaim"}
// with an exclusive end. Errors are {"error": message} with status 400
// (bad query), 401 (token), 404 (unknown item), 409 (skip of a reviewed
// item) or 422 (invalid spans).

#ifndef ARGPROJ_REVIEW_SERVER_H_
#define ARGPROJ_REVIEW_SERVER_H_

#include <memory>
#include <string>

#include "argproj/review_session.h"

namespace httplib {
class Server;
}

namespace argproj {

struct ReviewServerOptions {
  std::string host = "127.0.0.1";
  // When set, requests must carry "X-Argproj-Token: <token>".
  std::string token;
  std::size_t max_page_size = 500;
};

class ReviewServer {
 public:
  ReviewServer(ReviewSession& session, ReviewServerOptions options);
  ~ReviewServer();

  ReviewServer(const ReviewServer&) = delete;
  ReviewServer& operator=(const ReviewServer&) = delete;

  // Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int Bind(int port);
  // Serves until Stop(). Call after Bind().
  bool Run();
  void Stop();

 private:
  void Routes();

  ReviewSession& session_;
  ReviewServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace argproj

#endif  // ARGPROJ_REVIEW_SERVER_H_
