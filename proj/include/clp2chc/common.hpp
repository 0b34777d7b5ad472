// Copyright 2026 The clp2chc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace clp2chc {

using Integer = boost::multiprecision::cpp_int;

/// Location of a piece of source text. Lines and columns are 1-based.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  std::size_t end() const { return offset + length; }

  /// Smallest span covering both.
  static Span cover(const Span& a, const Span& b) {
    Span out = a.offset <= b.offset ? a : b;
    out.length = std::max(a.end(), b.end()) - out.offset;
    return out;
  }
};

/// Base class of all errors raised by the library. Errors tied to an input
/// location carry its span.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message, std::optional<Span> span = std::nullopt)
      : std::runtime_error(message), span_(span) {}

  const std::optional<Span>& span() const { return span_; }

 private:
  std::optional<Span> span_;
};

/// Heap-allocated value with value semantics; used to build recursive
/// variants without exposing pointers.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

}  // namespace clp2chc
