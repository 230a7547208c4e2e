#include "rnnids/seqmodel/model_io.hpp"

#include <bit>
#include <cstring>
#include <string>

#include "rnnids/error.hpp"

namespace rnnids::seqmodel {

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    out_.insert(out_.end(), b, b + n);
  }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  std::uint8_t u8() { return need(1)[0]; }
  std::uint32_t u32() {
    auto p = need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{p[i]} << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    auto p = need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{p[i]} << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  ByteView bytes(std::size_t n) { return need(n); }
  bool done() const { return pos_ == data_.size(); }

  std::size_t count(std::uint64_t limit, const char* what) {
    const std::uint64_t v = u64();
    if (v > limit) throw ModelFormatError(std::string("implausible ") + what);
    return static_cast<std::size_t>(v);
  }

 private:
  ByteView need(std::size_t n) {
    if (data_.size() - pos_ < n) throw ModelFormatError("model file truncated");
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  ByteView data_;
  std::size_t pos_ = 0;
};

void write_matrix(Writer& w, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) w.f64(m(r, c));
  }
}

void read_matrix(Reader& r, Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = r.f64();
  }
}

void write_vector(Writer& w, const Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) w.f64(v[i]);
}

void read_vector(Reader& r, Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = r.f64();
}

}  // namespace

Bytes serialize_model(const LstmModel& model) {
  model.validate();
  const auto& c = model.config;
  Writer w;
  w.raw(kModelMagic, kModelMagicSize);
  w.u64(c.batch_size);
  w.f64(c.learning_rate);
  w.u64(c.epochs);
  w.u64(model.num_layers());
  w.u64(c.embedding_size);
  w.u64(c.sequence_length);
  w.u64(model.hidden_size());
  w.u64(c.hidden_cap);
  w.u64(c.rng_seed);
  w.f64(c.temperature);
  w.f64(c.grad_clip);
  w.u8(static_cast<std::uint8_t>(c.optimizer));
  w.u32(static_cast<std::uint32_t>(model.vocab.size()));
  w.raw(model.vocab.octets().data(), model.vocab.size());
  w.u64(model.loss_trace.size());
  for (double x : model.loss_trace) w.f64(x);

  const auto& p = model.params;
  write_matrix(w, p.embedding);
  for (const auto& layer : p.layers) {
    for (const auto& g : layer.gates) {
      write_matrix(w, g.input_weights);
      write_matrix(w, g.recurrent_weights);
      write_vector(w, g.bias);
    }
  }
  write_matrix(w, p.output_weights);
  write_vector(w, p.output_bias);
  return w.take();
}

LstmModel deserialize_model(ByteView data) {
  if (data.size() < kModelMagicSize || std::memcmp(data.data(), kModelMagic, kModelMagicSize) != 0) {
    throw ModelFormatError("not an RNNIDS-LSTM v1 model file");
  }
  Reader r(data.subspan(kModelMagicSize));
  constexpr std::uint64_t kMaxDim = 1u << 16;
  LstmConfig c;
  c.batch_size = r.count(kMaxDim, "batch_size");
  c.learning_rate = r.f64();
  c.epochs = r.count(UINT64_MAX, "epochs");
  c.num_hidden_layers = r.count(1024, "layer count");
  c.embedding_size = r.count(kMaxDim, "embedding size");
  c.sequence_length = r.count(UINT64_MAX, "sequence length");
  c.hidden_size = r.count(kMaxDim, "hidden size");
  c.hidden_cap = r.count(UINT64_MAX, "hidden cap");
  c.rng_seed = r.u64();
  c.temperature = r.f64();
  c.grad_clip = r.f64();
  const std::uint8_t opt = r.u8();
  if (opt > 1) throw ModelFormatError("unknown optimizer tag");
  c.optimizer = static_cast<Optimizer>(opt);
  try {
    c.validate();
  } catch (const InvalidConfig& e) {
    throw ModelFormatError(std::string("bad config: ") + e.what());
  }
  if (c.hidden_size == 0) throw ModelFormatError("hidden size is zero");

  const std::uint32_t vocab_size = r.u32();
  if (vocab_size == 0 || vocab_size > 256) throw ModelFormatError("vocabulary size out of range");
  const ByteView octets = r.bytes(vocab_size);

  LstmModel model = init_model(Vocab::from_octets(Bytes(octets.begin(), octets.end())), c, c.hidden_size);
  const std::size_t trace = r.count(1u << 24, "loss trace length");
  for (std::size_t i = 0; i < trace; ++i) model.loss_trace.push_back(r.f64());

  auto& p = model.params;
  read_matrix(r, p.embedding);
  for (auto& layer : p.layers) {
    for (auto& g : layer.gates) {
      read_matrix(r, g.input_weights);
      read_matrix(r, g.recurrent_weights);
      read_vector(r, g.bias);
    }
  }
  read_matrix(r, p.output_weights);
  read_vector(r, p.output_bias);
  if (!r.done()) throw ModelFormatError("trailing data after parameters");
  try {
    model.validate();
  } catch (const ShapeError& e) {
    throw ModelFormatError(e.what());
  }
  return model;
}

void save_model(const LstmModel& model, const std::filesystem::path& path) {
  write_file(path, serialize_model(model));
}

LstmModel load_model(const std::filesystem::path& path) { return deserialize_model(read_file(path)); }

}  // namespace rnnids::seqmodel
