#include <gtest/gtest.h>

#include <filesystem>

#include "rnnids/error.hpp"
#include "rnnids/seqmodel/model_io.hpp"
#include "rnnids/seqmodel/train.hpp"

namespace rnnids::seqmodel {
namespace {

LstmModel trained_model() {
  LstmConfig cfg;
  cfg.embedding_size = 4;
  cfg.hidden_size = 6;
  cfg.epochs = 2;
  cfg.learning_rate = 0.1;
  cfg.optimizer = Optimizer::kAdam;
  cfg.rng_seed = 77;
  return train(encode_corpus(to_bytes("payload\x00\xff payload")), cfg);
}

TEST(ModelIo, RoundTripIsExact) {
  const LstmModel m = trained_model();
  const Bytes blob = serialize_model(m);
  const LstmModel back = deserialize_model(blob);
  EXPECT_EQ(back.vocab, m.vocab);
  EXPECT_EQ(back.loss_trace, m.loss_trace);
  EXPECT_EQ(back.config.rng_seed, 77u);
  EXPECT_EQ(back.config.optimizer, Optimizer::kAdam);
  EXPECT_EQ(serialize_model(back), blob);
}

TEST(ModelIo, FileRoundTrip) {
  const LstmModel m = trained_model();
  const auto path = std::filesystem::temp_directory_path() / "rnnids_model_io_test.bin";
  save_model(m, path);
  EXPECT_EQ(serialize_model(load_model(path)), serialize_model(m));
  std::filesystem::remove(path);
}

TEST(ModelIo, RejectsCorruptInput) {
  const Bytes blob = serialize_model(trained_model());
  Bytes bad_magic = blob;
  bad_magic[0] = 'X';
  EXPECT_THROW(deserialize_model(bad_magic), ModelFormatError);
  const Bytes truncated(blob.begin(), blob.end() - 5);
  EXPECT_THROW(deserialize_model(truncated), ModelFormatError);
  Bytes trailing = blob;
  trailing.push_back(0);
  EXPECT_THROW(deserialize_model(trailing), ModelFormatError);
  EXPECT_THROW(deserialize_model({}), ModelFormatError);
}

}  // namespace
}  // namespace rnnids::seqmodel
