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

#pragma once

#include <string>
#include <vector>

#include "diagdiff/diagram.hpp"
#include "diagdiff/serialize.hpp"
#include "diagdiff/truth_table.hpp"

namespace diagdiff::corpus {

enum class Category { misc, zx, cq, bubble, stone };

std::string to_string(Category c);

struct Entry {
  std::string name;
  std::string description;
  Category category;
  FormalSum diagram;
};

/// The built-in named diagrams, in a fixed order. Files under corpus/ are
/// generated from these.
const std::vector<Entry>& entries();
const Entry& get(const std::string& name);

struct NamedTable {
  std::string name;
  TruthTableFn table;
};

const std::vector<NamedTable>& truth_tables();

/// File contents for an entry: the sum plus "name", "category" and
/// "description" keys.
json::Json entry_json(const Entry& e);
json::Json truth_tables_json();

/// id on `left` qubits ⊗ d ⊗ id on `right` qubits.
Diagram on_qubits(const Diagram& d, std::size_t left, std::size_t right);

/// |0..0⟩, the doubled pure circuit, then measurement of every qubit.
Diagram measured(const Diagram& pure_circuit);

}  // namespace diagdiff::corpus
