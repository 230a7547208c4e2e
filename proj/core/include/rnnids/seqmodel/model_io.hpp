#pragma once

#include <filesystem>

#include "rnnids/bytes.hpp"
#include "rnnids/seqmodel/lstm.hpp"

namespace rnnids::seqmodel {

// Flat little-endian model file:
//
//   magic            12 octets  "RNNIDS-LSTM" 0x01
//   batch_size       u64
//   learning_rate    f64
//   epochs           u64
//   num_layers       u64
//   embedding_size   u64
//   sequence_length  u64
//   hidden_size      u64
//   hidden_cap       u64
//   rng_seed         u64
//   temperature      f64
//   grad_clip        f64
//   optimizer        u8   (0 sgd, 1 adam)
//   vocab_size       u32, then vocab_size octets in token-id order
//   trace_length     u64, then trace_length f64 epoch losses
//   parameters       f64 each, tensors in ModelParams::tensors() order,
//                    every matrix written row by row
inline constexpr char kModelMagic[] = "RNNIDS-LSTM\x01";
inline constexpr std::size_t kModelMagicSize = 12;

Bytes serialize_model(const LstmModel& model);
// Throws ModelFormatError.
LstmModel deserialize_model(ByteView data);

void save_model(const LstmModel& model, const std::filesystem::path& path);
LstmModel load_model(const std::filesystem::path& path);

}  // namespace rnnids::seqmodel
