// Copyright 2026 The qdeg Authors
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

#include <stdexcept>
#include <string>

namespace qdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotCP : public Error {
 public:
  using Error::Error;
};

class NotTP : public Error {
 public:
  using Error::Error;
};

/// A channel parameter lies outside the completely positive range.
class OutOfCPRange : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// A supplied environment channel is not complementary to the channel.
class NotComplementary : public Error {
 public:
  using Error::Error;
};

/// Malformed channel spec, JSON document or CLI argument.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdeg
