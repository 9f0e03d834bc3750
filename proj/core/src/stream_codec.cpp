#include "smdm/stream_codec.hpp"

#include <cstdint>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace smdm {

namespace {

std::vector<std::uint8_t> read_all(std::istream& in) {
    std::vector<std::uint8_t> data;
    char buf[65536];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        data.insert(data.end(), buf, buf + in.gcount());
    return data;
}

// MSB-first view over a byte buffer
class BitReader {
public:
    explicit BitReader(const std::vector<std::uint8_t>& data) : data_(data) {}
    std::uint64_t bit_count() const { return std::uint64_t{8} * data_.size(); }
    int next() {
        const std::uint8_t byte = data_[pos_ >> 3];
        const int bit = (byte >> (7 - (pos_ & 7))) & 1;
        ++pos_;
        return bit;
    }

private:
    const std::vector<std::uint8_t>& data_;
    std::uint64_t pos_ = 0;
};

class BitWriter {
public:
    void push(int bit) {
        if ((fill_ & 7) == 0) data_.push_back(0);
        if (bit) data_.back() |= static_cast<std::uint8_t>(1u << (7 - (fill_ & 7)));
        ++fill_;
    }
    const std::vector<std::uint8_t>& bytes() const { return data_; }

private:
    std::vector<std::uint8_t> data_;
    std::uint64_t fill_ = 0;
};

std::vector<std::uint8_t> parse_text_symbols(const std::vector<std::uint8_t>& raw) {
    std::istringstream ss(std::string(raw.begin(), raw.end()));
    std::vector<std::uint8_t> symbols;
    long long v;
    while (ss >> v) {
        if (v < 0 || v > 255) throw std::domain_error("decode: symbol index " + std::to_string(v) + " out of range");
        symbols.push_back(static_cast<std::uint8_t>(v));
    }
    if (!ss.eof()) throw std::domain_error("decode: malformed text symbol stream");
    return symbols;
}

}  // namespace

void encode_stream(const ShellMapper& mapper, unsigned input_bits, std::istream& in,
                   std::ostream& out, SymbolFormat format) {
    if (input_bits < 1) throw std::invalid_argument("encode: input_bits must be >= 1");
    mapper.codebook_size(input_bits);  // validates 2^m <= |A|^n up front
    const std::vector<std::uint8_t> data = read_all(in);
    BitReader bits(data);
    if (bits.bit_count() % input_bits != 0)
        throw std::domain_error("encode: input of " + std::to_string(bits.bit_count()) +
                                " bits is not a multiple of the block size " + std::to_string(input_bits));
    const std::uint64_t blocks = bits.bit_count() / input_bits;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        BigInt index = 0;
        for (unsigned i = 0; i < input_bits; ++i) {
            index <<= 1;
            if (bits.next()) index |= 1;
        }
        const std::vector<std::uint8_t> seq = mapper.encode(input_bits, index);
        if (format == SymbolFormat::bytes) {
            out.write(reinterpret_cast<const char*>(seq.data()), static_cast<std::streamsize>(seq.size()));
        } else {
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) out << ' ';
                out << static_cast<int>(seq[i]);
            }
            out << '\n';
        }
    }
    out.flush();
}

void decode_stream(const ShellMapper& mapper, unsigned input_bits, std::istream& in,
                   std::ostream& out, SymbolFormat format) {
    if (input_bits < 1) throw std::invalid_argument("decode: input_bits must be >= 1");
    mapper.codebook_size(input_bits);
    const std::vector<std::uint8_t> raw = read_all(in);
    const std::vector<std::uint8_t> symbols =
        format == SymbolFormat::bytes ? raw : parse_text_symbols(raw);
    const std::uint32_t n = mapper.block_length();
    if (symbols.size() % n != 0)
        throw std::domain_error("decode: input of " + std::to_string(symbols.size()) +
                                " symbols is not a multiple of the block length " + std::to_string(n));
    const std::uint64_t blocks = symbols.size() / n;
    BitWriter bits;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        BigInt index;
        try {
            index = mapper.decode(input_bits, std::span(symbols).subspan(b * n, n));
        } catch (const std::out_of_range& e) {
            throw std::out_of_range("decode: block " + std::to_string(b) + ": " + e.what());
        }
        for (unsigned i = 0; i < input_bits; ++i)
            bits.push(boost::multiprecision::bit_test(index, input_bits - 1 - i) ? 1 : 0);
    }
    const auto& bytes = bits.bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
}

}  // namespace smdm
