// Copyright 2026 The diagdiff Authors
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

// Writes the built-in corpus to DIR/<name>.json and DIR/truth_tables.json.

#include <filesystem>
#include <iostream>

#include "diagdiff/corpus.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus DIR\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  using namespace diagdiff;
  for (const auto& e : corpus::entries()) {
    json::write_file((dir / (e.name + ".json")).string(), corpus::entry_json(e));
  }
  json::write_file((dir / "truth_tables.json").string(), corpus::truth_tables_json());
  std::cout << "wrote " << corpus::entries().size() + 1 << " files to " << dir.string() << '\n';
  return 0;
}
