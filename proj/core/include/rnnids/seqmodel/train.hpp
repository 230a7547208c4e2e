#pragma once

#include <cstdint>
#include <functional>

#include "rnnids/bytes.hpp"
#include "rnnids/seqmodel/corpus.hpp"
#include "rnnids/seqmodel/lstm.hpp"

namespace rnnids::seqmodel {

using EpochCallback = std::function<void(std::size_t epoch, double mean_loss)>;

// Truncated BPTT over `config.epochs` passes. Each pass starts from a zero
// state, carries the state across windows of `sequence_length` steps and
// updates the parameters after every `batch_size` windows. The returned
// model's `loss_trace` holds the mean training loss of every epoch.
//
// Throws TooShort, InvalidConfig, TrainingDiverged.
LstmModel train(const TokenCorpus& corpus, const LstmConfig& config, const EpochCallback& on_epoch = {});

// Continues training an existing model in place with its own config.
void train_more(LstmModel& model, const TokenCorpus& corpus, const EpochCallback& on_epoch = {});

// Primes the state with `seed`, then draws `length` octets from
// softmax(logits / temperature). Throws UnknownToken, InvalidConfig.
Bytes sample(const LstmModel& model, ByteView seed, std::size_t length, double temperature,
             std::uint64_t rng_seed);

}  // namespace rnnids::seqmodel
