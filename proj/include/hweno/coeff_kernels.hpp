// Generated by tools/gen_coeffs.py. Do not edit by hand.
// Coefficients of the compactified spin-weighted wave operator,
// normalized so the equation reads
//   d_tt u = a_tr d_tr u + a_rr d_rr u + a_th (d_qq + cot q d_q) u
//          + (bt_re + i bt_im) d_t u + (br_re + i br_im) d_r u
//          + (c_re + i c_im) u
// in (t, r, q) = (tau, rho, theta); all entries are rational in rho
// and cos(theta) and regular at the horizon.  The slicing reaches
// scri in outgoing null cones only for M = 1, where the generic
// rational form has a removable 0/0 at rho = S; the specialized
// M = 1 kernel below carries the fully cancelled expressions.
#pragma once

namespace hweno {

template <int N, class T> constexpr T powi(T x) {
  if constexpr (N == 0) return T(1);
  else if constexpr (N % 2 == 0) { T h = powi<N / 2>(x); return h * h; }
  else { T h = powi<N / 2>(x); return h * h * x; }
}

template <class T> struct WaveOpCoeffs {
  T a_tr, a_rr, bt_re, bt_im, br_re, br_im, c_re, c_im, a_th;
  T da_tr, da_rr;  // d/drho of a_tr, a_rr
};

template <class T>
WaveOpCoeffs<T> wave_op_coeffs_generic(T rho, T cth, T M, T a, T S,
    int spin, int mmode) {
  T sw = T(spin);
  T mm = T(mmode);
  (void)sw; (void)mm;
  T x0 = powi<3>(rho);
  T x1 = powi<3>(S);
  T x2 = (x0 * x1);
  T x3 = (T(8) * x2);
  T x4 = powi<4>(S);
  T x5 = (x0 * x4);
  T x6 = (T(2) * x5);
  T x7 = powi<2>(S);
  T x8 = powi<4>(rho);
  T x9 = (T(4) * x8);
  T x10 = powi<2>(a);
  T x11 = (T(4) * x4);
  T x12 = (x10 * x11);
  T x13 = powi<2>(rho);
  T x14 = (x11 * x13);
  T x15 = (x0 * x7);
  T x16 = (x15 * M);
  T x17 = (T(16) * x0);
  T x18 = (x10 * x17);
  T x19 = (T(16) * x1);
  T x20 = (x10 * x19);
  T x21 = (x20 * rho);
  T x22 = ((-T(1)) * x21);
  T x23 = (M * rho);
  T x24 = (x23 * x4);
  T x25 = (x1 * x10);
  T x26 = (x13 * x25);
  T x27 = powi<5>(S);
  T x28 = (x23 * x27);
  T x29 = (T(2) * x28);
  T x30 = ((-T(1)) * x29);
  T x31 = (x10 * rho);
  T x32 = (x31 * x4);
  T x33 = (T(8) * x8);
  T x34 = (M * S);
  T x35 = (x0 * x10);
  T x36 = (x35 * x7);
  T x37 = (x13 * M);
  T x38 = (x1 * x37);
  T x39 = (x10 * x13);
  T x40 = (x39 * x7);
  T x41 = (x1 * x8);
  T x42 = (T(3) * x41);
  T x43 = (x33 * x7);
  T x44 = (x43 * M);
  T x45 = (x8 * S);
  T x46 = (x10 * x45);
  T x47 = (T(5) * x46);
  T x48 = powi<5>(rho);
  T x49 = (x48 * x7);
  T x50 = (x10 * x48);
  T x51 = (T(2) * S);
  T x52 = (x51 * M);
  T x53 = (x48 * x52);
  T x54 = (x49 + x50 + x53);
  T x55 = (x54 + ((-T(1)) * x42) + ((-T(1)) * x44) + ((-T(1)) * x47));
  T x56 = (x13 * x27);
  T x57 = (x13 * x19);
  T x58 = (x0 * x19);
  T x59 = (x10 * x33);
  T x60 = (x17 * x7);
  T x61 = powi<2>(cth);
  T x62 = (x10 * x27);
  T x63 = (x61 * x62);
  T x64 = (x37 * x7);
  T x65 = (T(64) * x64);
  T x66 = (T(48) * x16);
  T x67 = (x13 * S);
  T x68 = (x10 * x67);
  T x69 = (T(48) * x68);
  T x70 = (T(32) * S);
  T x71 = (x35 * x70);
  T x72 = (T(4) * x26);
  T x73 = (x2 * M);
  T x74 = (T(4) * x73);
  T x75 = (x37 * x4);
  T x76 = (T(8) * x75);
  T x77 = (T(8) * x36);
  T x78 = (T(16) * M);
  T x79 = (x45 * x78);
  T x80 = (T(16) * x24);
  T x81 = (x57 * M);
  T x82 = (x0 * M);
  T x83 = (x70 * x82);
  T x84 = (x1 * x23);
  T x85 = (T(32) * x84);
  T x86 = (T(40) * x40);
  T x87 = (x31 * x7);
  T x88 = (T(48) * x87);
  T x89 = (x32 * x61);
  T x90 = (x29 + x55);
  T x91 = (T(1) / (x18 + x22 + x43 + x5 + x56 + x59 + x60 + x63 + x74 + x76 + x77 + x79 + x80 + x81 + x83 + x85 + x86 + x88 + x90 + ((-T(1)) * x20) + ((-T(1)) * x57) + ((-T(1)) * x58) + ((-T(1)) * x65) + ((-T(1)) * x66) + ((-T(1)) * x69) + ((-T(1)) * x71) + ((-T(1)) * x72) + ((-T(1)) * x89)));
  T x92 = (T(2) * x91);
  T x93 = (((-T(1)) * x56) + ((-T(1)) * x76));
  T x94 = (T(2) * x8);
  T x95 = (T(2) * x35);
  T x96 = (x11 * x23);
  T x97 = (T(4) * sw);
  T x98 = (T(10) * rho);
  T x99 = (x28 * sw);
  T x100 = (x75 * sw);
  T x101 = (x1 * sw);
  T x102 = (x15 * sw);
  T x103 = (T(4) * M);
  T x104 = (x8 * M);
  T x105 = (x104 * x7);
  T x106 = (T(3) * x73);
  T x107 = (x106 + x5 + x54 + ((-T(5)) * x105) + ((-T(3)) * x46) + ((-T(2)) * x41) + (x105 * sw) + (x41 * sw) + (x56 * sw) + (x7 * x95) + ((-T(1)) * x106 * sw) + ((-T(1)) * x6 * sw));
  T x108 = (x92 * (T(1) / rho));
  T x109 = (S * mm);
  T x110 = (T(4) * mm);
  T x111 = (mm * rho);
  T x112 = (T(2) * x7);
  T x113 = (x7 * rho);
  T x114 = (cth * sw);
  T x115 = (x92 * a);
  T x116 = (x7 * mm);
  T x117 = (x0 * x52);
  T x118 = (T(2) * x84);
  T x119 = (T(2) * x25);
  T x120 = (x101 * x13);
  T x121 = (x117 * sw);
  T x122 = (T(2) * x101 * x23);
  T x123 = (T(4) * x64);
  T x124 = (T(6) * x68);
  T x125 = (T(6) * x87);
  T x126 = (x64 * x97);
  T x127 = (x61 * powi<2>(sw));
  T x128 = powi<4>(cth);
  T x129 = (x50 * x61);
  T x130 = (x59 * x61);
  T x131 = (x18 * x61);
  T x132 = powi<9>(S);
  T x133 = (x132 * x8);
  T x134 = powi<6>(S);
  T x135 = powi<7>(rho);
  T x136 = (x134 * x135);
  T x137 = (x27 * x48);
  T x138 = (T(64) * x137);
  T x139 = (x135 * x27);
  T x140 = powi<8>(S);
  T x141 = (T(6) * x140);
  T x142 = (x141 * x8);
  T x143 = (x140 * x48);
  T x144 = powi<8>(rho);
  T x145 = (T(2) * x144);
  T x146 = powi<4>(a);
  T x147 = powi<6>(rho);
  T x148 = powi<7>(S);
  T x149 = (x147 * x148);
  T x150 = (T(16) * x48);
  T x151 = (T(16) * x148);
  T x152 = (x146 * x151);
  T x153 = (x151 * x8);
  T x154 = (T(32) * x147);
  T x155 = (T(32) * x134);
  T x156 = (x155 * x8);
  T x157 = powi<10>(S);
  T x158 = (x157 * x37);
  T x159 = (x146 * x61);
  T x160 = (x135 * x146);
  T x161 = (x160 * x7);
  T x162 = (T(512) * x48);
  T x163 = powi<2>(M);
  T x164 = (x1 * x163);
  T x165 = (x0 * x27);
  T x166 = (x134 * x163);
  T x167 = (x0 * x166);
  T x168 = (x146 * x41);
  T x169 = (x4 * M);
  T x170 = (x169 * x48);
  T x171 = (x166 * x8);
  T x172 = (x1 * x50);
  T x173 = (x0 * x62);
  T x174 = (x146 * x48);
  T x175 = (x174 * S);
  T x176 = (x146 * rho);
  T x177 = (x176 * x27);
  T x178 = (x148 * x82);
  T x179 = (T(128) * x134);
  T x180 = (x62 * x8);
  T x181 = (x104 * x148);
  T x182 = (x10 * x8);
  T x183 = (x134 * x182);
  T x184 = (x134 * x146);
  T x185 = (x13 * x184);
  T x186 = (x134 * x176);
  T x187 = (x135 * x164);
  T x188 = (x134 * x48);
  T x189 = (T(48) * x188);
  T x190 = (x135 * x169);
  T x191 = (x1 * x174);
  T x192 = (x4 * x8);
  T x193 = (x146 * x192);
  T x194 = (x148 * x48);
  T x195 = (x194 * M);
  T x196 = (x135 * x25);
  T x197 = (x174 * x4);
  T x198 = (x134 * x50);
  T x199 = (x10 * x140);
  T x200 = (T(16) * x135);
  T x201 = (x146 * x200);
  T x202 = (x146 * x56);
  T x203 = (T(8) * x140);
  T x204 = (x135 * x4);
  T x205 = (x163 * x204);
  T x206 = (x139 * M);
  T x207 = (T(4) * x132);
  T x208 = (x10 * M);
  T x209 = (x207 * x208);
  T x210 = (x207 * x31);
  T x211 = (x140 * x39);
  T x212 = (x10 * x7);
  T x213 = (x144 * x212);
  T x214 = (T(4) * x148);
  T x215 = (x13 * x146);
  T x216 = (x132 * x82);
  T x217 = (x146 * x147);
  T x218 = (x1 * x217);
  T x219 = (x1 * M);
  T x220 = (T(8) * x144);
  T x221 = (x147 * x27);
  T x222 = (x221 * M);
  T x223 = (T(8) * x132);
  T x224 = (x223 * x37);
  T x225 = (x163 * x7);
  T x226 = (x13 * x163);
  T x227 = (x132 * x226);
  T x228 = (x147 * x62);
  T x229 = (x148 * x8);
  T x230 = (x10 * x229);
  T x231 = (x163 * x17);
  T x232 = (x27 * x50);
  T x233 = (x147 * x4);
  T x234 = (x163 * x233);
  T x235 = (x0 * x140);
  T x236 = (x134 * x147);
  T x237 = (x236 * M);
  T x238 = (x27 * x8);
  T x239 = (x146 * x238);
  T x240 = (T(32) * x148 * x39);
  T x241 = (x10 * x233);
  T x242 = (x148 * x35);
  T x243 = (x217 * x7);
  T x244 = (x147 * x212);
  T x245 = (x140 * x226);
  T x246 = (x146 * x165);
  T x247 = (T(128) * x147);
  T x248 = (x163 * x238);
  T x249 = (T(144) * x134);
  T x250 = (x188 * M);
  T x251 = (x137 * M);
  T x252 = (x148 * x226);
  T x253 = (x137 * x163);
  T x254 = (x146 * x5);
  T x255 = (T(256) * x4);
  T x256 = (x146 * x49);
  T x257 = (x104 * x27);
  T x258 = (x4 * x48);
  T x259 = (x163 * x258);
  T x260 = (x182 * x4);
  T x261 = (x7 * x8);
  T x262 = (T(480) * x146);
  T x263 = (x13 * x4);
  T x264 = (x163 * x192);
  T x265 = (x157 * M);
  T x266 = (x10 * x265);
  T x267 = (x266 * x61);
  T x268 = (T(1280) * x208);
  T x269 = (T(640) * x208);
  T x270 = (x10 * x104);
  T x271 = (x270 * x4);
  T x272 = (x104 * x62);
  T x273 = (x10 * x23);
  T x274 = (x62 * x82);
  T x275 = (x148 * x273);
  T x276 = (T(64) * x275);
  T x277 = (T(64) * x232);
  T x278 = (x135 * x212);
  T x279 = (x278 * M);
  T x280 = (x134 * x159);
  T x281 = (x13 * x280);
  T x282 = (T(32) * x140);
  T x283 = (x199 * x37);
  T x284 = (x0 * x280);
  T x285 = (x203 * x35 * x61);
  T x286 = (x159 * rho);
  T x287 = (x196 * M);
  T x288 = (x159 * x192);
  T x289 = (x132 * x39);
  T x290 = (x289 * x61);
  T x291 = (x10 * x34);
  T x292 = (x10 * x37);
  T x293 = (x13 * x159);
  T x294 = (x148 * x293);
  T x295 = (T(24) * x148);
  T x296 = (x242 * M);
  T x297 = (x134 * x270);
  T x298 = (x147 * x169);
  T x299 = (x10 * x298);
  T x300 = (x169 * x50);
  T x301 = (x147 * x25);
  T x302 = (x301 * M);
  T x303 = (x134 * x35);
  T x304 = (x303 * M);
  T x305 = (x134 * x292);
  T x306 = (x172 * M);
  T x307 = (T(48) * x10);
  T x308 = (x148 * x37);
  T x309 = (x296 * x61);
  T x310 = (x104 * x63);
  T x311 = (x283 * x61);
  T x312 = (x199 * x23);
  T x313 = (T(24) * x61);
  T x314 = (x304 * x61);
  T x315 = (x200 * x4);
  T x316 = (x147 * x164);
  T x317 = (x147 * x255);
  T x318 = (x217 * S);
  T x319 = (T(64) * x135);
  T x320 = (T(384) * M);
  T x321 = (T(2) * x159);
  T x322 = (x129 * x134);
  T x323 = (x159 * x238);
  T x324 = (x129 * x27);
  T x325 = (x201 + x315 + ((-T(1)) * x289) + ((-T(320)) * x316) + ((-T(160)) * x301) + ((-T(112)) * x318) + ((-T(48)) * x221) + ((-T(2)) * x322) + (T(10) * x323) + (T(32) * x278) + (x219 * x319) + (x225 * x319) + (x291 * x319) + ((-T(1)) * x103 * x324) + ((-T(1)) * x244 * x320) + ((-T(1)) * x258 * x321) + ((-T(1)) * x317 * M) + (T(7) * x230 * x61) + (T(17) * x297 * x61));
  T x326 = powi<10>(rho);
  T x327 = (T(96) * x144);
  T x328 = powi<9>(rho);
  T x329 = (T(16) * x328);
  T x330 = (x144 * x27);
  T x331 = (T(256) * x134);
  T x332 = (x331 * x8);
  T x333 = (T(2) * x132);
  T x334 = (T(256) * x146);
  T x335 = (T(1024) * x219);
  T x336 = (T(384) * x144);
  T x337 = (T(64) * x328);
  T x338 = (T(4) * x326);
  T x339 = (T(1024) * x134);
  T x340 = (T(20) * M);
  T x341 = (T(768) * x148);
  T x342 = (T(52) * M);
  T x343 = (T(12) * M);
  T x344 = (x144 * x146);
  T x345 = (T(512) * x134);
  T x346 = (x128 * x146);
  T x347 = (T(1024) * x291);
  T x348 = (x10 * x326);
  T x349 = (T(64) * x199);
  T x350 = (x23 * x349);
  T x351 = (T(1024) * x225);
  T x352 = (T(32) * x328);
  T x353 = (x144 * x4);
  T x354 = (T(80) * x163);
  T x355 = (T(4096) * x163);
  T x356 = (T(320) * x163);
  T x357 = (T(32) * x163);
  T x358 = (T(1024) * x166);
  T x359 = (x163 * x188);
  T x360 = (x0 * x163);
  T x361 = (x163 * x229);
  T x362 = (T(4) * x157);
  T x363 = (T(512) * x212);
  T x364 = (T(3840) * x146);
  T x365 = (T(5120) * x146);
  T x366 = (x144 * x25);
  T x367 = (x4 * x50);
  T x368 = (T(576) * x10);
  T x369 = (x10 * x236);
  T x370 = (x0 * x184);
  T x371 = (T(64) * x242);
  T x372 = (x229 * x307);
  T x373 = (T(8) * x148);
  T x374 = (x282 * x39);
  T x375 = (x282 * x35);
  T x376 = (x159 * x282);
  T x377 = (T(5120) * x208);
  T x378 = (T(10240) * x208);
  T x379 = (T(168) * x10);
  T x380 = (x232 * M);
  T x381 = (x10 * x181);
  T x382 = (T(128) * x159);
  T x383 = (x273 * x61);
  T x384 = (x10 * x61);
  T x385 = (T(2) * x61);
  T x386 = (x0 * x159);
  T x387 = (T(1) / (x317 + x332 + x371 + x372 + ((-T(1)) * x350) + ((-T(1)) * x374) + ((-T(1)) * x375) + ((-T(1)) * x376) + ((-T(14336)) * x271) + ((-T(7680)) * x168) + ((-T(7680)) * x300) + ((-T(5120)) * x316) + ((-T(4224)) * x191) + ((-T(4096)) * x298) + ((-T(3584)) * x180) + ((-T(3072)) * x170) + ((-T(2816)) * x202) + ((-T(2688)) * x279) + ((-T(2560)) * x301) + ((-T(2304)) * x187) + ((-T(2304)) * x232) + ((-T(2048)) * x172) + ((-T(2048)) * x173) + ((-T(1920)) * x171) + ((-T(1920)) * x190) + ((-T(1920)) * x246) + ((-T(1856)) * x299) + ((-T(1792)) * x318) + ((-T(1536)) * x175) + ((-T(1536)) * x177) + ((-T(1536)) * x253) + ((-T(1152)) * x196) + ((-T(1008)) * x218) + ((-T(832)) * x359) + ((-T(768)) * x221) + ((-T(640)) * x228) + ((-T(576)) * x239) + ((-T(512)) * x178) + ((-T(512)) * x275) + ((-T(384)) * x139) + ((-T(224)) * x296) + ((-T(224)) * x366) + ((-T(192)) * x281) + ((-T(128)) * x237) + ((-T(128)) * x309) + ((-T(80)) * x330) + ((-T(64)) * x310) + ((-T(32)) * x288) + ((-T(32)) * x381) + ((-T(16)) * x149) + ((-T(16)) * x322) + (T(30) * x369) + (T(32) * x216) + (T(64) * x227) + (T(80) * x323) + (T(112) * x136) + (T(112) * x294) + (T(128) * x370) + (T(192) * x213) + (T(192) * x314) + (T(192) * x361) + (T(240) * x198) + (T(384) * x185) + (T(384) * x236) + (T(384) * x245) + (T(528) * x161) + (T(576) * x380) + (T(672) * x206) + (T(736) * x183) + (T(960) * x205) + (T(960) * x304) + (T(1024) * x252) + (T(1056) * x197) + (T(1504) * x287) + (T(2496) * x241) + (T(2496) * x243) + (T(2688) * x222) + (T(2752) * x272) + (T(3072) * x257) + (T(3072) * x260) + (T(3936) * x193) + (T(4224) * x234) + (T(4608) * x251) + (T(4608) * x367) + (T(6144) * x264) + (T(6144) * x274) + (T(6400) * x254) + (T(6912) * x302) + (T(8192) * x259) + (T(13824) * x306) + (x112 * x348) + (x129 * x373) + (x13 * x358) + (x133 * x340) + (x134 * x162) + (x135 * x255) + (x135 * x334) + (x135 * x335) + (x135 * x347) + (x135 * x351) + (x135 * x363) + (x143 * x343) + (x146 * x326) + (x146 * x327) + (x146 * x329) + (x146 * x331) + (x147 * x334) + (x147 * x335) + (x147 * x347) + (x147 * x351) + (x147 * x363) + (x157 * x346) + (x157 * x8) + (x165 * x382) + (x176 * x345) + (x194 * x357) + (x204 * x368) + (x212 * x352) + (x219 * x336) + (x219 * x337) + (x219 * x338) + (x225 * x336) + (x225 * x337) + (x225 * x338) + (x226 * x362) + (x228 * x342) + (x235 * x356) + (x261 * x364) + (x263 * x364) + (x270 * x345) + (x291 * x336) + (x291 * x337) + (x295 * x386) + (x307 * x353) + (x322 * x340) + (x326 * x4) + (x327 * x4) + (x329 * x4) + (x333 * x48) + (x339 * x35) + (x341 * x360) + (x345 * x39) + (x350 * x61) + (x353 * x354) + (x362 * x383) + (x365 * x49) + (x371 * x61) + (x372 * x61) + (x373 * x50) + (x377 * x56) + (x378 * x41) + ((-T(1)) * x0 * x358) + ((-T(1)) * x104 * x339) + ((-T(1)) * x104 * x341) + ((-T(1)) * x130 * x140) + ((-T(1)) * x135 * x214) + ((-T(1)) * x136 * x340) + ((-T(1)) * x138 * x146) + ((-T(1)) * x139 * x357) + ((-T(1)) * x140 * x59) + ((-T(1)) * x149 * x342) + ((-T(1)) * x156 * x384) + ((-T(1)) * x162 * x27) + ((-T(1)) * x164 * x352) + ((-T(1)) * x165 * x355) + ((-T(1)) * x169 * x336) + ((-T(1)) * x188 * x320) + ((-T(1)) * x190 * x379) + ((-T(1)) * x194 * x320) + ((-T(1)) * x2 * x365) + ((-T(1)) * x20 * x328) + ((-T(1)) * x203 * x293) + ((-T(1)) * x221 * x356) + ((-T(1)) * x233 * x321) + ((-T(1)) * x238 * x355) + ((-T(1)) * x249 * x386) + ((-T(1)) * x273 * x339) + ((-T(1)) * x282 * x48) + ((-T(1)) * x282 * x8) + ((-T(1)) * x285 * M) + ((-T(1)) * x308 * x368) + ((-T(1)) * x313 * x381) + ((-T(1)) * x319 * x62) + ((-T(1)) * x339 * x82) + ((-T(1)) * x349 * x37) + ((-T(1)) * x369 * x385) + ((-T(1)) * x374 * x61) + ((-T(1)) * x375 * x61) + ((-T(1)) * x376 * rho) + ((-T(1)) * x377 * x49) + ((-T(1)) * x378 * x5) + ((-T(6144)) * x244 * M) + ((-T(4096)) * x164 * x48) + ((-T(768)) * x160 * S) + ((-T(512)) * x213 * M) + ((-T(448)) * x144 * x164) + ((-T(192)) * x308 * x384) + ((-T(144)) * x344 * S) + ((-T(104)) * x163 * x236) + ((-T(88)) * x1 * x160) + ((-T(32)) * x324 * M) + ((-T(28)) * x169 * x328) + ((-T(26)) * x280 * x8) + ((-T(6)) * x27 * x328) + ((-T(5)) * x140 * x147) + (T(4) * x0 * x265) + (T(4) * x34 * x348) + (T(11) * x134 * x144) + (T(12) * x137 * x159) + (T(16) * x184 * x8) + (T(32) * x132 * x383) + (T(41) * x344 * x7) + (T(60) * x330 * M) + (T(76) * x198 * M) + (T(104) * x217 * x4) + (T(120) * x366 * M) + (x0 * x132 * x357) + (x13 * x140 * x346) + (x140 * x354 * x8) + (x148 * x382 * rho) + (x157 * x385 * x39) + (x179 * x270 * x61) + ((-T(1)) * x103 * x147 * x63) + ((-T(1)) * x140 * x18 * M) + ((-T(1)) * x150 * x159 * x4) + ((-T(1)) * x333 * x346 * rho) + ((-T(36)) * x212 * x328 * M) + ((-T(10)) * x146 * x328 * S) + (T(12) * x132 * x37 * x384)));
  T x388 = (x157 * x31);
  T x389 = (x140 * x35);
  T x390 = (x223 * x273);
  WaveOpCoeffs<T> o;
  o.a_tr = ((-T(1)) * x92 * (x12 + x14 + x22 + x30 + x55 + x6 + ((-T(1)) * x3) + ((-T(24)) * x16) + ((-T(8)) * x24) + ((-T(7)) * x26) + (T(2) * x32) + (T(9) * x36) + (T(24) * x38) + (T(24) * x40) + (x10 * x9) + (x3 * M) + (x33 * x34) + (x7 * x9) + ((-T(1)) * x18 * S)));
  o.a_rr = ((-T(1)) * x91 * (x90 + x93 + ((-T(1)) * x62) + ((-T(10)) * x26) + (T(3) * x5) + (T(5) * x32) + (T(10) * x36) + (T(12) * x73)));
  o.bt_re = ((-T(1)) * x108 * (x100 + x107 + x26 + x28 + x96 + x99 + ((-T(1)) * x12) + ((-T(1)) * x32) + ((-T(1)) * x75) + ((-T(6)) * x40) + ((-T(4)) * x16) + ((-T(4)) * x38) + ((-T(2)) * x2) + (x10 * x94) + (x102 * x103) + (x2 * x97) + (x25 * x98) + (x34 * x9) + (x7 * x94) + (x96 * sw) + ((-T(1)) * x14 * sw) + ((-T(1)) * x95 * S) + ((-T(8)) * x101 * x37)));
  o.bt_im = ((-T(1)) * x115 * x7 * ((x0 * mm) + (x101 * cth) + (x110 * x13) + (x110 * x7) + (x111 * x112) + ((-T(1)) * x113 * x114) + ((-T(8)) * x109 * rho) + ((-T(3)) * x109 * x13)));
  o.br_re = ((-T(1)) * x108 * (x107 + x62 + x75 + ((-T(1)) * x28) + ((-T(1)) * x99) + ((-T(3)) * x32) + (T(2) * x26) + (T(3) * x100)));
  o.br_im = (x115 * x116 * (x1 + ((-T(1)) * x0) + ((-T(3)) * x113) + (T(3) * x67)));
  o.c_re = (x7 * (T(1) / (x129 + x130 + x131 + x20 + x21 + x30 + x42 + x44 + x47 + x57 + x58 + x65 + x66 + x69 + x71 + x72 + x89 + x93 + ((-T(1)) * x18) + ((-T(1)) * x43) + ((-T(1)) * x49) + ((-T(1)) * x5) + ((-T(1)) * x50) + ((-T(1)) * x53) + ((-T(1)) * x59) + ((-T(1)) * x60) + ((-T(1)) * x63) + ((-T(1)) * x74) + ((-T(1)) * x77) + ((-T(1)) * x79) + ((-T(1)) * x80) + ((-T(1)) * x81) + ((-T(1)) * x83) + ((-T(1)) * x85) + ((-T(1)) * x86) + ((-T(1)) * x88) + (x128 * x62) + (x29 * x61) + (x43 * x61) + (x49 * x61) + (x5 * x61) + (x53 * x61) + (x56 * x61) + (x60 * x61) + (x61 * x74) + (x61 * x76) + (x61 * x77) + (x61 * x79) + (x61 * x80) + (x61 * x81) + (x61 * x83) + (x61 * x85) + (x61 * x86) + (x61 * x88) + ((-T(1)) * x128 * x32) + ((-T(1)) * x20 * x61) + ((-T(1)) * x21 * x61) + ((-T(1)) * x42 * x61) + ((-T(1)) * x44 * x61) + ((-T(1)) * x47 * x61) + ((-T(1)) * x57 * x61) + ((-T(1)) * x58 * x61) + ((-T(1)) * x61 * x65) + ((-T(1)) * x61 * x66) + ((-T(1)) * x61 * x69) + ((-T(1)) * x61 * x71) + ((-T(1)) * x61 * x72))) * ((x116 * (x109 + ((-T(1)) * x111) + (x114 * x51) + ((-T(2)) * x114 * rho))) + ((-T(1)) * (T(1) / x13) * (x119 + x120 + x123 + x124 + x126 + ((-T(1)) * x102) + ((-T(1)) * x117) + ((-T(1)) * x118) + ((-T(1)) * x121) + ((-T(1)) * x122) + ((-T(1)) * x125) + ((-T(1)) * x95) + (x102 * x61) + (x117 * x61) + (x118 * x61) + (x121 * x61) + (x122 * x61) + (x125 * x61) + (x127 * x15) + (x61 * x95) + ((-T(1)) * x119 * x61) + ((-T(1)) * x120 * x61) + ((-T(1)) * x123 * x61) + ((-T(1)) * x124 * x61) + ((-T(1)) * x126 * x61) + ((-T(1)) * x1 * x127 * x13)))));
  o.c_im = ((-T(1)) * x1 * x108 * a * mm * (x13 + x7 + ((-T(1)) * x51 * rho)));
  o.a_th = (x4 * x91 * (S + ((-T(1)) * rho)));
  o.da_tr = ((-T(4)) * x387 * (x133 + x152 + x153 + x156 + x158 + x224 + x240 + x325 + ((-T(1)) * x136) + ((-T(1)) * x138) + ((-T(1)) * x142) + ((-T(1)) * x161) + ((-T(1)) * x209) + ((-T(1)) * x210) + ((-T(1)) * x267) + ((-T(1)) * x276) + ((-T(1)) * x285) + ((-T(528)) * x271) + ((-T(448)) * x167) + ((-T(400)) * x168) + ((-T(384)) * x170) + ((-T(308)) * x272) + ((-T(296)) * x171) + ((-T(256)) * x172) + ((-T(256)) * x173) + ((-T(192)) * x175) + ((-T(192)) * x177) + ((-T(160)) * x178) + ((-T(128)) * x180) + ((-T(128)) * x274) + ((-T(120)) * x181) + ((-T(70)) * x183) + ((-T(64)) * x185) + ((-T(56)) * x279) + ((-T(48)) * x186) + ((-T(48)) * x187) + ((-T(40)) * x190) + ((-T(40)) * x191) + ((-T(36)) * x281) + ((-T(30)) * x193) + ((-T(24)) * x195) + ((-T(24)) * x196) + ((-T(24)) * x309) + ((-T(19)) * x197) + ((-T(19)) * x283) + ((-T(19)) * x284) + ((-T(18)) * x198) + ((-T(16)) * x202) + ((-T(12)) * x310) + ((-T(8)) * x139) + ((-T(8)) * x205) + ((-T(6)) * x206) + ((-T(6)) * x287) + ((-T(6)) * x288) + ((-T(3)) * x143) + (T(2) * x211) + (T(3) * x149) + (T(3) * x290) + (T(4) * x213) + (T(6) * x216) + (T(7) * x218) + (T(8) * x222) + (T(8) * x227) + (T(10) * x228) + (T(12) * x311) + (T(13) * x230) + (T(16) * x232) + (T(17) * x294) + (T(24) * x234) + (T(25) * x237) + (T(25) * x239) + (T(26) * x296) + (T(28) * x297) + (T(35) * x299) + (T(36) * x241) + (T(40) * x242) + (T(40) * x314) + (T(44) * x243) + (T(64) * x244) + (T(72) * x245) + (T(72) * x300) + (T(88) * x246) + (T(96) * x302) + (T(128) * x248) + (T(144) * x250) + (T(192) * x251) + (T(192) * x252) + (T(208) * x304) + (T(224) * x253) + (T(240) * x254) + (T(288) * x305) + (T(304) * x256) + (T(384) * x257) + (T(384) * x259) + (T(384) * x260) + (T(768) * x264) + (T(768) * x306) + (x104 * x249) + (x131 * x148) + (x132 * x159) + (x134 * x150) + (x145 * x146) + (x145 * x4) + (x146 * x154) + (x146 * x155) + (x148 * x150) + (x148 * x231) + (x151 * x292) + (x152 * rho) + (x154 * x4) + (x210 * x61) + (x214 * x215) + (x219 * x220) + (x219 * x247) + (x220 * x225) + (x220 * x291) + (x225 * x247) + (x247 * x291) + (x255 * x50) + (x261 * x262) + (x262 * x263) + (x268 * x41) + (x269 * x56) + (x286 * x295) + (x312 * x313) + ((-T(1)) * x140 * x95) + ((-T(1)) * x141 * x159) + ((-T(1)) * x142 * M) + ((-T(1)) * x153 * x163) + ((-T(1)) * x155 * x35) + ((-T(1)) * x162 * x164) + ((-T(1)) * x163 * x189) + ((-T(1)) * x17 * x184) + ((-T(1)) * x179 * x273) + ((-T(1)) * x179 * x82) + ((-T(1)) * x199 * x78) + ((-T(1)) * x201 * S) + ((-T(1)) * x203 * x82) + ((-T(1)) * x209 * x61) + ((-T(1)) * x268 * x5) + ((-T(1)) * x269 * x49) + ((-T(1)) * x273 * x282) + ((-T(1)) * x277 * M) + ((-T(640)) * x146 * x2) + ((-T(512)) * x163 * x165) + ((-T(14)) * x211 * x61) + ((-T(7)) * x140 * x286) + ((-T(6)) * x183 * x61) + ((-T(2)) * x10 * x204) + (T(16) * x140 * x37) + (T(24) * x159 * x165) + (T(24) * x163 * x235) + (T(40) * x163 * x221) + (T(64) * x134 * x39) + (T(128) * x13 * x166) + ((-T(1)) * x307 * x308 * x61)));
  o.da_rr = ((-T(2)) * x387 * (x189 + x266 + x267 + x276 + x325 + x388 + x390 + ((-T(1)) * x152) + ((-T(1)) * x153) + ((-T(1)) * x224) + ((-T(1)) * x240) + ((-T(1)) * x277) + ((-T(1280)) * x271) + ((-T(640)) * x248) + ((-T(560)) * x168) + ((-T(384)) * x305) + ((-T(336)) * x171) + ((-T(336)) * x202) + ((-T(320)) * x180) + ((-T(208)) * x300) + ((-T(160)) * x181) + ((-T(152)) * x191) + ((-T(148)) * x380) + ((-T(128)) * x359) + ((-T(120)) * x272) + ((-T(112)) * x279) + ((-T(96)) * x187) + ((-T(80)) * x190) + ((-T(80)) * x245) + ((-T(68)) * x185) + ((-T(64)) * x195) + ((-T(64)) * x252) + ((-T(50)) * x370) + ((-T(48)) * x196) + ((-T(40)) * x197) + ((-T(38)) * x198) + ((-T(32)) * x296) + ((-T(28)) * x309) + ((-T(24)) * x183) + ((-T(20)) * x283) + ((-T(20)) * x284) + ((-T(16)) * x139) + ((-T(16)) * x211) + ((-T(16)) * x227) + ((-T(11)) * x389) + ((-T(2)) * x136) + ((-T(2)) * x158) + ((-T(2)) * x161) + (T(2) * x133) + (T(4) * x216) + (T(4) * x344) + (T(5) * x290) + (T(6) * x149) + (T(8) * x194) + (T(8) * x213) + (T(12) * x236) + (T(14) * x218) + (T(16) * x312) + (T(20) * x228) + (T(20) * x294) + (T(22) * x311) + (T(33) * x230) + (T(48) * x242) + (T(50) * x237) + (T(60) * x239) + (T(64) * x178) + (T(64) * x250) + (T(64) * x361) + (T(70) * x299) + (T(88) * x222) + (T(96) * x241) + (T(100) * x193) + (T(100) * x243) + (T(112) * x186) + (T(133) * x297) + (T(144) * x234) + (T(160) * x303) + (T(264) * x302) + (T(304) * x304) + (T(320) * x167) + (T(320) * x367) + (T(336) * x256) + (T(560) * x254) + (T(640) * x259) + (T(960) * x274) + (T(960) * x306) + (x11 * x144) + (x137 * x320) + (x138 * x163) + (x140 * x231) + (x159 * x333) + (x208 * x223) + (x221 * x354) + ((-T(1)) * x12 * x135) + ((-T(1)) * x139 * x343) + ((-T(1)) * x140 * x33) + ((-T(1)) * x141 * x48) + ((-T(1)) * x146 * x203) + ((-T(1)) * x160 * x70) + ((-T(1)) * x163 * x315) + ((-T(1)) * x196 * x343) + ((-T(1)) * x308 * x379) + ((-T(1)) * x332 * M) + ((-T(1)) * x388 * x61) + ((-T(1)) * x390 * x61) + ((-T(9)) * x389 * x61) + ((-T(4)) * x140 * x176) + (T(16) * x144 * x225) + (T(22) * x148 * x215) + (T(24) * x104 * x140) + (T(40) * x148 * x176) + (T(80) * x140 * x82) + (T(288) * x148 * x360) + (x144 * x19 * M) + (x146 * x17 * x27) + ((-T(1)) * x140 * x159 * x98) + (x10 * x144 * x78 * S)));
  return o;
}

template <class T>
WaveOpCoeffs<T> wave_op_coeffs_m1(T rho, T cth, T a, T S,
    int spin, int mmode) {
  T sw = T(spin);
  T mm = T(mmode);
  (void)sw; (void)mm;
  T x0 = powi<2>(rho);
  T x1 = powi<2>(S);
  T x2 = (x0 * x1);
  T x3 = (T(16) * x2);
  T x4 = ((-T(1)) * x3);
  T x5 = powi<2>(a);
  T x6 = powi<3>(S);
  T x7 = (T(4) * x6);
  T x8 = (x5 * x7);
  T x9 = (x0 * x6);
  T x10 = (T(2) * x9);
  T x11 = powi<3>(rho);
  T x12 = (x11 * x5);
  T x13 = (T(4) * x12);
  T x14 = (x11 * S);
  T x15 = (x6 * rho);
  T x16 = (x0 * S);
  T x17 = (x16 * x5);
  T x18 = (x15 * x5);
  T x19 = (T(2) * x18);
  T x20 = (x2 * x5);
  T x21 = (x1 * rho);
  T x22 = (x21 * x5);
  T x23 = (x11 * x6);
  T x24 = (T(2) * x23);
  T x25 = (T(4) * x14);
  T x26 = (x25 * x5);
  T x27 = powi<4>(rho);
  T x28 = (x1 * x27);
  T x29 = (x27 * x5);
  T x30 = (T(2) * S);
  T x31 = (x27 * x30);
  T x32 = (x28 + x29 + x31);
  T x33 = (x32 + ((-T(1)) * x24) + ((-T(1)) * x26));
  T x34 = (x1 * x11);
  T x35 = (T(2) * x34);
  T x36 = powi<4>(S);
  T x37 = (x36 * rho);
  T x38 = (T(2) * x37);
  T x39 = (x38 + ((-T(1)) * x35));
  T x40 = (x0 * x36);
  T x41 = (T(32) * x16);
  T x42 = (T(16) * x14);
  T x43 = (T(16) * x5);
  T x44 = (x1 * x43);
  T x45 = (x0 * x43);
  T x46 = (T(8) * x12);
  T x47 = (T(10) * x9);
  T x48 = (T(16) * x15);
  T x49 = (T(32) * x21);
  T x50 = powi<2>(cth);
  T x51 = (x36 * x5);
  T x52 = (x50 * x51);
  T x53 = (x44 * rho);
  T x54 = (T(4) * x20);
  T x55 = (T(24) * x17);
  T x56 = (x5 * rho);
  T x57 = (x56 * S);
  T x58 = (T(32) * x57);
  T x59 = (T(1) / (x24 + x26 + x3 + x39 + x40 + x47 + x48 + x49 + x52 + x55 + x58 + ((-T(1)) * x28) + ((-T(1)) * x29) + ((-T(1)) * x31) + ((-T(1)) * x41) + ((-T(1)) * x42) + ((-T(1)) * x44) + ((-T(1)) * x45) + ((-T(1)) * x46) + ((-T(1)) * x53) + ((-T(1)) * x54)));
  T x60 = (T(2) * x59);
  T x61 = (T(4) * x15);
  T x62 = (x33 + ((-T(1)) * x38));
  T x63 = (T(2) * x12);
  T x64 = (x37 * sw);
  T x65 = (x10 * sw);
  T x66 = (x2 * sw);
  T x67 = (T(2) * x5);
  T x68 = (x32 + ((-T(1)) * x23) + (x23 * sw) + (x34 * sw) + ((-T(1)) * x14 * x67) + ((-T(1)) * x40 * sw));
  T x69 = (x60 * (T(1) / rho));
  T x70 = (T(4) * mm);
  T x71 = (x30 * rho);
  T x72 = (x0 * mm);
  T x73 = (x1 * cth * sw);
  T x74 = (x1 * x60 * a);
  T x75 = (T(2) * x16);
  T x76 = (T(2) * x21);
  T x77 = (T(4) * x57);
  T x78 = (x75 * sw);
  T x79 = (x1 * x67);
  T x80 = (x0 * x67);
  T x81 = (x50 * x76);
  T x82 = powi<4>(cth);
  T x83 = (x40 * x50);
  T x84 = (x29 * x50);
  T x85 = powi<7>(S);
  T x86 = (x27 * x85);
  T x87 = powi<8>(S);
  T x88 = (x0 * x87);
  T x89 = powi<6>(S);
  T x90 = powi<5>(rho);
  T x91 = (x89 * x90);
  T x92 = (T(192) * x11);
  T x93 = (x36 * x92);
  T x94 = (x27 * x36);
  T x95 = (x27 * x6);
  T x96 = powi<5>(S);
  T x97 = (x27 * x96);
  T x98 = (x36 * x90);
  T x99 = (x43 * x89);
  T x100 = (x90 * x96);
  T x101 = (T(4) * x85);
  T x102 = (x101 * x5);
  T x103 = powi<6>(rho);
  T x104 = (x103 * x36);
  T x105 = powi<4>(a);
  T x106 = (T(2) * x103);
  T x107 = (x27 * x89);
  T x108 = (x1 * x103);
  T x109 = (T(8) * x108);
  T x110 = (x103 * x6);
  T x111 = (x11 * x85);
  T x112 = (T(16) * x105);
  T x113 = (x112 * x96);
  T x114 = (x0 * x85);
  T x115 = (x6 * x90);
  T x116 = (T(32) * x115);
  T x117 = (T(32) * x105);
  T x118 = (T(32) * x96);
  T x119 = (x0 * x89);
  T x120 = (x0 * x96);
  T x121 = (x105 * x50);
  T x122 = (x121 * x85);
  T x123 = (x1 * x90);
  T x124 = (x105 * x123);
  T x125 = (x114 * x5);
  T x126 = (x5 * x87);
  T x127 = (x126 * x50);
  T x128 = (T(384) * x5);
  T x129 = (T(192) * x5);
  T x130 = (T(128) * x105);
  T x131 = (x51 * rho);
  T x132 = (x56 * x96);
  T x133 = (x29 * x6);
  T x134 = (x105 * x9);
  T x135 = (x56 * x89);
  T x136 = (x120 * x5);
  T x137 = (x119 * x5);
  T x138 = (x115 * x5);
  T x139 = (x105 * S);
  T x140 = (x139 * x90);
  T x141 = (T(8) * x5);
  T x142 = (T(8) * x105);
  T x143 = (x11 * x36);
  T x144 = (x121 * x89);
  T x145 = (T(6) * x144);
  T x146 = (x51 * x90);
  T x147 = (T(4) * x105);
  T x148 = (x105 * x95);
  T x149 = (x29 * x96);
  T x150 = (x103 * S);
  T x151 = (x105 * x28);
  T x152 = (x12 * x96);
  T x153 = (x29 * x36);
  T x154 = (T(64) * x5);
  T x155 = (x29 * S);
  T x156 = (x11 * x51);
  T x157 = (x40 * x5);
  T x158 = (x105 * x2);
  T x159 = (x50 * x67);
  T x160 = (x137 * x50);
  T x161 = (x96 * rho);
  T x162 = (x121 * x161);
  T x163 = (x11 * x89);
  T x164 = (T(64) * x1);
  T x165 = (x139 * x27);
  T x166 = (x5 * S);
  T x167 = (x166 * x90);
  T x168 = (x13 * x50);
  T x169 = (T(2) * x121);
  T x170 = (x50 * x89);
  T x171 = (x125 * x50);
  T x172 = (x120 * x121);
  T x173 = (((-T(80)) * x165) + (T(3) * x171) + (T(6) * x172) + (T(48) * x163) + (T(64) * x167) + (x112 * x90) + (x164 * x90) + ((-T(1)) * x143 * x169) + ((-T(1)) * x168 * x96) + ((-T(1)) * x170 * x63));
  T x174 = powi<8>(rho);
  T x175 = powi<7>(rho);
  T x176 = (T(4) * x174);
  T x177 = (x175 * x6);
  T x178 = (T(256) * x105);
  T x179 = (T(4) * x175);
  T x180 = (T(1024) * x96);
  T x181 = (x103 * x105);
  T x182 = (x175 * S);
  T x183 = (T(1024) * x105);
  T x184 = (x105 * x37);
  T x185 = (T(64) * x135);
  T x186 = (T(3072) * x5);
  T x187 = (T(3584) * x5);
  T x188 = (x123 * x5);
  T x189 = (x105 * x34);
  T x190 = (T(96) * x5);
  T x191 = (x105 * x40);
  T x192 = (x12 * x89);
  T x193 = (T(8) * x29);
  T x194 = (x117 * x170);
  T x195 = (x56 * x85);
  T x196 = (T(32) * x50);
  T x197 = (x127 * rho);
  T x198 = (T(64) * x120);
  T x199 = (T(8) * x121);
  T x200 = (T(1) / (((-T(1)) * x185) + ((-T(1)) * x194) + ((-T(2048)) * x23) + ((-T(2048)) * x95) + ((-T(1792)) * x134) + ((-T(1408)) * x188) + ((-T(1280)) * x165) + ((-T(1024)) * x131) + ((-T(1024)) * x94) + ((-T(704)) * x136) + ((-T(640)) * x98) + ((-T(576)) * x140) + ((-T(512)) * x115) + ((-T(512)) * x132) + ((-T(512)) * x157) + ((-T(352)) * x152) + ((-T(320)) * x148) + ((-T(132)) * x104) + ((-T(80)) * x149) + ((-T(48)) * x100) + ((-T(48)) * x192) + (T(4) * x197) + (T(4) * x88) + (T(20) * x171) + (T(28) * x86) + (T(32) * x91) + (T(40) * x177) + (T(48) * x172) + (T(64) * x110) + (T(64) * x114) + (T(64) * x162) + (T(72) * x111) + (T(96) * x181) + (T(188) * x107) + (T(204) * x146) + (T(256) * x97) + (T(288) * x124) + (T(384) * x108) + (T(384) * x119) + (T(384) * x191) + (T(448) * x163) + (T(512) * x184) + (T(640) * x153) + (T(640) * x156) + (T(1024) * x123) + (T(1024) * x155) + (T(1024) * x167) + (T(1024) * x28) + (T(1024) * x40) + (T(1152) * x133) + (T(1248) * x151) + (T(1536) * x158) + (T(2304) * x189) + (x0 * x180) + (x1 * x176) + (x101 * x90) + (x105 * x174) + (x106 * x89) + (x11 * x180) + (x112 * x175) + (x112 * x94) + (x130 * x143) + (x137 * x196) + (x154 * x182) + (x159 * x88) + (x164 * x175) + (x166 * x176) + (x168 * x85) + (x174 * x36) + (x174 * x7) + (x174 * x79) + (x178 * x27) + (x178 * x36) + (x178 * x90) + (x185 * x50) + (x186 * x9) + (x187 * x23) + (x195 * x196) + (x27 * x87) + ((-T(1)) * x100 * x141) + ((-T(1)) * x103 * x118) + ((-T(1)) * x105 * x116) + ((-T(1)) * x108 * x129) + ((-T(1)) * x115 * x190) + ((-T(1)) * x117 * x83) + ((-T(1)) * x119 * x190) + ((-T(1)) * x119 * x199) + ((-T(1)) * x13 * x170) + ((-T(1)) * x14 * x183) + ((-T(1)) * x142 * x182) + ((-T(1)) * x15 * x183) + ((-T(1)) * x169 * x94) + ((-T(1)) * x179 * x36) + ((-T(1)) * x179 * x96) + ((-T(1)) * x186 * x34) + ((-T(1)) * x187 * x28) + ((-T(1)) * x193 * x89) + ((-T(1)) * x194 * rho) + ((-T(1152)) * x105 * x23) + ((-T(112)) * x181 * S) + ((-T(100)) * x110 * x5) + ((-T(12)) * x177 * x5) + ((-T(4)) * x84 * x96) + ((-T(2)) * x84 * x89) + (T(4) * x11 * x87) + (T(22) * x103 * x51) + (T(24) * x1 * x181) + (T(384) * x103 * x166) + (x1 * x179 * x5) + (x105 * x82 * x87) + (x11 * x199 * x96) + ((-T(1)) * x112 * x143 * x50) + ((-T(1)) * x118 * x12 * x50) + ((-T(1)) * x198 * x5 * x50)));
  WaveOpCoeffs<T> o;
  o.a_tr = (x60 * (x13 + x33 + x39 + x4 + ((-T(1)) * x10) + ((-T(1)) * x19) + ((-T(1)) * x8) + ((-T(12)) * x17) + (T(5) * x20) + (T(8) * x14) + (T(8) * x15) + (T(12) * x22)));
  o.a_rr = (x59 * (x40 + x51 + x62 + ((-T(6)) * x34) + (T(6) * x20) + (T(6) * x9) + ((-T(1)) * x5 * x61)));
  o.bt_re = (x69 * (x18 + x25 + x63 + x65 + x68 + x8 + ((-T(1)) * x34) + ((-T(1)) * x37) + ((-T(1)) * x61) + ((-T(1)) * x64) + ((-T(6)) * x22) + (T(4) * x66) + ((-T(1)) * x61 * sw)));
  o.bt_im = ((-T(1)) * x74 * (x73 + ((-T(1)) * x72) + (x70 * S) + (x71 * mm) + ((-T(1)) * x70 * rho)));
  o.br_re = (x69 * (x19 + x37 + x64 + x68 + ((-T(1)) * x51) + ((-T(1)) * x65) + ((-T(3)) * x34)));
  o.br_im = (x74 * mm * (x0 + x1 + ((-T(1)) * x71)));
  o.c_re = (x1 * (T(1) / x0) * (T(1) / (x35 + x4 + x41 + x42 + x44 + x45 + x46 + x53 + x54 + x62 + x83 + ((-T(1)) * x40) + ((-T(1)) * x47) + ((-T(1)) * x48) + ((-T(1)) * x49) + ((-T(1)) * x52) + ((-T(1)) * x55) + ((-T(1)) * x58) + ((-T(1)) * x84) + (x24 * x50) + (x26 * x50) + (x3 * x50) + (x38 * x50) + (x47 * x50) + (x48 * x50) + (x49 * x50) + (x50 * x55) + (x50 * x58) + (x51 * x82) + ((-T(1)) * x28 * x50) + ((-T(1)) * x31 * x50) + ((-T(1)) * x35 * x50) + ((-T(1)) * x41 * x50) + ((-T(1)) * x42 * x50) + ((-T(1)) * x44 * x50) + ((-T(1)) * x45 * x50) + ((-T(1)) * x46 * x50) + ((-T(1)) * x50 * x53) + ((-T(1)) * x50 * x54))) * (x76 + x77 + ((-T(1)) * x66) + ((-T(1)) * x75) + ((-T(1)) * x78) + ((-T(1)) * x79) + ((-T(1)) * x80) + ((-T(1)) * x81) + (x2 * powi<2>(mm)) + (x50 * x66) + (x50 * x75) + (x50 * x78) + (x50 * x79) + (x50 * x80) + (x76 * sw) + ((-T(1)) * x50 * x77) + ((-T(1)) * x81 * sw) + (T(2) * x72 * x73) + (x2 * x50 * powi<2>(sw))));
  o.c_im = ((-T(1)) * x6 * x69 * a * mm * (S + ((-T(1)) * rho)));
  o.a_th = (x36 * x59);
  o.da_tr = ((-T(4)) * x200 * (x109 + x113 + x116 + x122 + x173 + x86 + x88 + ((-T(1)) * x102) + ((-T(1)) * x124) + ((-T(1)) * x125) + ((-T(1)) * x127) + ((-T(1)) * x145) + ((-T(1)) * x91) + ((-T(1)) * x93) + ((-T(1)) * x99) + ((-T(256)) * x23) + ((-T(144)) * x94) + ((-T(128)) * x131) + ((-T(96)) * x132) + ((-T(88)) * x133) + ((-T(64)) * x134) + ((-T(64)) * x95) + ((-T(40)) * x135) + ((-T(40)) * x97) + ((-T(28)) * x136) + ((-T(25)) * x137) + ((-T(22)) * x138) + ((-T(16)) * x98) + ((-T(12)) * x140) + ((-T(10)) * x100) + ((-T(2)) * x146) + (T(2) * x104) + (T(3) * x107) + (T(3) * x160) + (T(5) * x148) + (T(6) * x149) + (T(8) * x110) + (T(8) * x111) + (T(12) * x162) + (T(16) * x114) + (T(18) * x151) + (T(20) * x152) + (T(23) * x153) + (T(88) * x119) + (T(128) * x155) + (T(128) * x28) + (T(128) * x40) + (T(160) * x156) + (T(176) * x157) + (T(192) * x120) + (T(192) * x158) + (x105 * x106) + (x11 * x118) + (x113 * rho) + (x117 * x27) + (x117 * x36) + (x120 * x147) + (x128 * x9) + (x130 * x34) + (x141 * x150) + (x142 * x23) + (x154 * x23) + ((-T(1)) * x102 * x50) + ((-T(1)) * x102 * rho) + ((-T(1)) * x112 * x37) + ((-T(1)) * x117 * x40) + ((-T(1)) * x123 * x141) + ((-T(1)) * x128 * x34) + ((-T(1)) * x129 * x28) + ((-T(1)) * x13 * x89) + ((-T(1)) * x130 * x14) + ((-T(1)) * x130 * x15) + ((-T(1)) * x142 * x143) + ((-T(12)) * x136 * x50) + ((-T(6)) * x105 * x83) + ((-T(5)) * x144 * rho) + (T(4) * x108 * x5) + (x159 * x85 * rho) + (x50 * x99 * rho)));
  o.da_rr = ((-T(2)) * x200 * (x125 + x126 + x127 + x173 + x93 + ((-T(1)) * x113) + ((-T(1)) * x197) + ((-T(1)) * x198) + ((-T(256)) * x157) + ((-T(192)) * x95) + ((-T(160)) * x134) + ((-T(144)) * x136) + ((-T(128)) * x94) + ((-T(80)) * x119) + ((-T(48)) * x188) + ((-T(48)) * x98) + ((-T(44)) * x138) + ((-T(28)) * x152) + ((-T(24)) * x114) + ((-T(24)) * x140) + ((-T(20)) * x100) + ((-T(17)) * x137) + ((-T(12)) * x191) + ((-T(10)) * x192) + ((-T(4)) * x146) + ((-T(2)) * x124) + ((-T(2)) * x88) + ((-T(2)) * x91) + (T(2) * x122) + (T(2) * x86) + (T(4) * x104) + (T(4) * x181) + (T(8) * x97) + (T(9) * x160) + (T(10) * x148) + (T(10) * x195) + (T(12) * x149) + (T(16) * x108) + (T(16) * x110) + (T(18) * x107) + (T(32) * x135) + (T(48) * x151) + (T(64) * x132) + (T(70) * x153) + (T(80) * x184) + (T(144) * x156) + (T(160) * x189) + (x109 * x5) + (x126 * rho) + (x128 * x23) + (x141 * x85) + (x150 * x43) + (x92 * x96) + ((-T(1)) * x117 * x23) + ((-T(1)) * x142 * x89) + ((-T(1)) * x145 * rho) + ((-T(1)) * x193 * x6) + ((-T(256)) * x28 * x5) + ((-T(18)) * x105 * x143) + ((-T(6)) * x195 * x50) + (T(14) * x105 * x120) + (T(24) * x105 * x161) + ((-T(1)) * x147 * x89 * rho)));
  return o;
}

template <class T>
WaveOpCoeffs<T> wave_op_coeffs(T rho, T cth, T M, T a, T S,
    int spin, int mmode) {
  if (M == T(1)) return wave_op_coeffs_m1(rho, cth, a, S, spin, mmode);
  return wave_op_coeffs_generic(rho, cth, M, a, S, spin, mmode);
}

}  // namespace hweno
