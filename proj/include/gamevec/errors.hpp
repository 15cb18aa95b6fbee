// Copyright 2026 The gamevec Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gamevec {

// Base class for every error raised by the engine.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Game id is unknown, registry-reserved but unimplemented, or not supported by
// the requested agent.
class UnsupportedGame : public GameError {
 public:
  using GameError::GameError;
};

class IllegalAction : public GameError {
 public:
  using GameError::GameError;
};

class TerminalStep : public GameError {
 public:
  using GameError::GameError;
};

class InvalidPlayer : public GameError {
 public:
  using GameError::GameError;
};

class EmptyBatch : public GameError {
 public:
  using GameError::GameError;
};

class ShapeMismatch : public GameError {
 public:
  using GameError::GameError;
};

// An illegal action inside a batch; carries the offending slot.
class SlotIllegalAction : public IllegalAction {
 public:
  SlotIllegalAction(std::size_t slot, const std::string& what)
      : IllegalAction("slot " + std::to_string(slot) + ": " + what), slot_(slot) {}
  std::size_t slot() const noexcept { return slot_; }

 private:
  std::size_t slot_;
};

class DisconnectedRatingGraph : public GameError {
 public:
  using GameError::GameError;
};

class IoError : public GameError {
 public:
  using GameError::GameError;
};

}  // namespace gamevec
