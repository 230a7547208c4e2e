#!/usr/bin/env python3
"""Regenerates the binary fixtures under data/ deterministically.

    python3 tools/make_fixtures.py [data-dir]
"""
import random
import struct
import sys
from pathlib import Path


def ipv4(a):
    return bytes(int(x) for x in a.split("."))


def checksum(hdr):
    s = sum(struct.unpack("!%dH" % (len(hdr) // 2), hdr))
    s = (s & 0xFFFF) + (s >> 16)
    s = (s & 0xFFFF) + (s >> 16)
    return (~s) & 0xFFFF


def frame(proto, src, dst, sport, dport, payload, seq=1):
    if proto == 6:
        l4 = struct.pack("!HHIIBBHHH", sport, dport, seq, 0, 5 << 4, 0x18, 65535, 0, 0)
    else:
        l4 = struct.pack("!HHHH", sport, dport, 8 + len(payload), 0)
    total = 20 + len(l4) + len(payload)
    ip = struct.pack("!BBHHHBBH4s4s", 0x45, 0, total, seq & 0xFFFF, 0x4000, 64, proto, 0, ipv4(src), ipv4(dst))
    ip = ip[:10] + struct.pack("!H", checksum(ip)) + ip[12:]
    eth = bytes.fromhex("02000000000102000000000208 00".replace(" ", ""))
    return eth + ip + l4 + payload


def dns_query(r):
    labels = [r.choice(["www", "mail", "api", "cdn", "ns1"]), r.choice(["example", "corp", "lab"]), r.choice(["net", "org"])]
    q = b"".join(bytes([len(l)]) + l.encode() for l in labels) + b"\x00\x00\x01\x00\x01"
    return struct.pack("!HHHHHH", r.randrange(65536), 0x0100, 1, 0, 0, 0) + q


def ntp(r):
    return b"\x23" + bytes([0, 6, 0xEC]) + bytes(r.randrange(256) for _ in range(44))


def tls_data(r):
    body = bytes(r.randrange(256) for _ in range(r.randrange(40, 200)))
    return b"\x17\x03\x03" + struct.pack("!H", len(body)) + body


def http_get(r):
    path = "/" + r.choice(["index.html", "style.css", "img/logo.png", "api/v1/items"])
    return ("GET %s HTTP/1.1\r\nHost: intranet.example.org\r\nAccept: */*\r\n\r\n" % path).encode()


def benign_pcap(r):
    clients = ["10.1.0.%d" % i for i in range(10, 40)]
    servers = {53: "10.1.1.53", 123: "10.1.1.123", 443: "10.1.1.44", 80: "10.1.1.80"}
    kinds = [(17, 53, dns_query)] * 200 + [(17, 123, ntp)] * 90 + [(6, 443, tls_data)] * 100 + [(6, 80, http_get)] * 10
    r.shuffle(kinds)
    out = bytearray(struct.pack("<IHHiIII", 0xA1B2C3D4, 2, 4, 0, 0, 65535, 1))
    t = 1_700_000_000 * 1_000_000
    for n, (proto, port, make) in enumerate(kinds):
        t += r.randrange(500, 50_000)
        pkt = frame(proto, r.choice(clients), servers[port], r.randrange(32768, 61000), port, make(r), n + 1)
        out += struct.pack("<IIII", t // 1_000_000, t % 1_000_000, len(pkt), len(pkt)) + pkt
    return bytes(out)


def worm_mutants(r):
    tail = ("%u9090%u6858%ucbd3%u7801%u9090%u6858%ucbd3%u7801%u9090%u9090%u8190%u00c3"
            "%u0003%u8b00%u531b%u53ff%u0078%u0000%u00=a HTTP/1.0\r\n")
    out = []
    for k in range(6):
        fill = "X" if k == 5 else "N"  # the last mutant evades the baseline rule
        body = "GET /default.ida?" + fill * (40 + 17 * k) + tail
        body += "Content-type: text/xml\r\nContent-length: %d\r\n\r\n" % (3379 - k)
        body += "".join(chr(r.randrange(0x21, 0x7F)) for _ in range(32))
        out.append(body.encode())
    return out


def main():
    data = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data")
    (data / "worm").mkdir(parents=True, exist_ok=True)
    (data / "benign.pcap").write_bytes(benign_pcap(random.Random(4242)))
    for k, m in enumerate(worm_mutants(random.Random(2024))):
        (data / "worm" / ("mutant_%d.bin" % k)).write_bytes(m)


if __name__ == "__main__":
    main()
