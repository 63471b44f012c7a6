#include "polylab/quilt_table.hpp"

namespace polylab::detail {

// Depth-10 equiareal quilt with union area 125885/2^18 (< 1/2), found by a
// packing-constrained local search and re-verified at load time.
// Encoding per rectangle: (x_level << 24) | (x_index << 12) | y_index,
// with y_level = 10 - x_level.
const int kTableDepth = 10;
const unsigned kTableQuilt[1024] = {
    0x1000003, 0x1000008, 0x100000a, 0x1000020, 0x1000027, 0x1000029, 0x1000036, 0x1000038,
    0x100005b, 0x1000076, 0x1000094, 0x1000099, 0x100009e, 0x10000a6, 0x10000a9, 0x10000af,
    0x10000b0, 0x10000b7, 0x10000bb, 0x10000c9, 0x10000e6, 0x10000eb, 0x10000ef, 0x10000f2,
    0x10000f6, 0x100010c, 0x1000116, 0x100011a, 0x1000145, 0x100014f, 0x1000159, 0x1000161,
    0x1000168, 0x1000170, 0x1000177, 0x100017a, 0x1000180, 0x1000185, 0x10001a7, 0x10001a9,
    0x10001ac, 0x10001b1, 0x10001be, 0x10001cb, 0x10001d4, 0x10001db, 0x10001dc, 0x10001e9,
    0x10001ec, 0x10001f1, 0x10001f7, 0x10001fb, 0x1001005, 0x1001007, 0x1001008, 0x100100e,
    0x1001012, 0x1001020, 0x100102c, 0x100103b, 0x1001047, 0x100104c, 0x1001050, 0x1001056,
    0x100105b, 0x1001060, 0x100106b, 0x100106d, 0x1001085, 0x100108c, 0x1001096, 0x100109b,
    0x10010a2, 0x10010ab, 0x10010b1, 0x10010e8, 0x10010f2, 0x1001107, 0x1001108, 0x100110e,
    0x1001110, 0x100111e, 0x1001147, 0x100114a, 0x100114e, 0x1001161, 0x1001167, 0x100116b,
    0x1001173, 0x1001179, 0x100118a, 0x1001190, 0x1001196, 0x100119d, 0x10011a3, 0x10011c2,
    0x10011c6, 0x10011c8, 0x10011cd, 0x10011d4, 0x10011e3, 0x10011e5, 0x10011ec, 0x10011fd,
    0x2000001, 0x2000005, 0x2000013, 0x200001c, 0x200004a, 0x200004c, 0x2000053, 0x2000054,
    0x200005d, 0x2000073, 0x2000075, 0x2000079, 0x200007b, 0x20000a2, 0x20000a7, 0x20000bb,
    0x20000bd, 0x20000c2, 0x20000d3, 0x20000d6, 0x20000df, 0x20000ea, 0x20000f4, 0x20000fb,
    0x20000fd, 0x2001000, 0x2001010, 0x2001014, 0x200101b, 0x2001025, 0x200102d, 0x2001035,
    0x200103b, 0x200103d, 0x200104f, 0x2001057, 0x2001058, 0x200105b, 0x2001064, 0x2001077,
    0x2001086, 0x200108b, 0x200108d, 0x20010ac, 0x20010b0, 0x20010b4, 0x20010b8, 0x20010c0,
    0x20010d4, 0x20010d8, 0x20010e5, 0x20010ed, 0x20010ee, 0x20010f6, 0x20010f8, 0x2002003,
    0x200202b, 0x200202d, 0x2002030, 0x2002035, 0x2002042, 0x2002046, 0x200204b, 0x200204d,
    0x2002051, 0x2002077, 0x2002079, 0x2002084, 0x200208f, 0x20020a7, 0x20020b3, 0x20020b5,
    0x20020bc, 0x20020c5, 0x20020cb, 0x20020ce, 0x20020d1, 0x20020e4, 0x20020e6, 0x20020ea,
    0x20020f2, 0x20020f6, 0x2003004, 0x2003007, 0x2003009, 0x2003010, 0x2003016, 0x200301d,
    0x2003023, 0x2003026, 0x2003028, 0x2003036, 0x200304c, 0x2003055, 0x2003058, 0x200306d,
    0x2003074, 0x2003083, 0x2003087, 0x2003088, 0x20030a3, 0x20030a5, 0x20030b0, 0x20030b9,
    0x20030c8, 0x20030e1, 0x20030e3, 0x20030f1, 0x20030fe, 0x3000003, 0x300000e, 0x3000026,
    0x3000029, 0x300002a, 0x300002e, 0x300003a, 0x300003d, 0x3000051, 0x300005e, 0x3000061,
    0x300006b, 0x300006f, 0x300007a, 0x300007e, 0x3001002, 0x3001009, 0x3001025, 0x3001039,
    0x3001053, 0x300105d, 0x3001069, 0x3001075, 0x300107d, 0x300200a, 0x300200d, 0x3002012,
    0x3002016, 0x300201d, 0x300202b, 0x3002032, 0x300203c, 0x3002045, 0x3002056, 0x3002058,
    0x3002060, 0x300206a, 0x300206c, 0x3002077, 0x300207b, 0x3003000, 0x3003008, 0x300301a,
    0x300301e, 0x3003027, 0x3003029, 0x300302d, 0x3003039, 0x300303b, 0x3003043, 0x3003046,
    0x3003053, 0x300305a, 0x300305c, 0x3003072, 0x3003075, 0x300307c, 0x3004001, 0x3004016,
    0x3004018, 0x3004023, 0x3004042, 0x3004047, 0x3004053, 0x3004059, 0x300405a, 0x300405e,
    0x3004062, 0x300407b, 0x3005004, 0x3005015, 0x300501a, 0x3005021, 0x3005025, 0x3005027,
    0x3005028, 0x300503b, 0x300503c, 0x3005065, 0x3005067, 0x3005068, 0x3005075, 0x3006002,
    0x3006004, 0x300600b, 0x3006014, 0x300601b, 0x3006021, 0x3006026, 0x3006028, 0x300603a,
    0x3006043, 0x3006051, 0x3006052, 0x3006058, 0x3007008, 0x300700e, 0x3007011, 0x3007013,
    0x300702a, 0x300702c, 0x3007036, 0x3007041, 0x3007044, 0x3007059, 0x300705c, 0x3007064,
    0x3007070, 0x3007078, 0x300707f, 0x4000004, 0x4000015, 0x4000017, 0x400001e, 0x400002f,
    0x4000037, 0x400003d, 0x400003f, 0x4001001, 0x4001007, 0x4001013, 0x400101d, 0x4001028,
    0x4001030, 0x4001035, 0x4002000, 0x4002004, 0x4002012, 0x4002016, 0x400201c, 0x4002029,
    0x400202e, 0x4002034, 0x4002037, 0x400203a, 0x400203e, 0x4004005, 0x4004006, 0x4004009,
    0x400400b, 0x4004019, 0x400401e, 0x400402b, 0x4004036, 0x4004039, 0x400403b, 0x400403d,
    0x400500e, 0x4005015, 0x4005022, 0x400502c, 0x4005030, 0x4005035, 0x400600f, 0x4006013,
    0x4006016, 0x4006021, 0x4006029, 0x400602d, 0x4006039, 0x400603e, 0x4007000, 0x400700d,
    0x4007014, 0x400701d, 0x4007023, 0x400702e, 0x400703a, 0x4008000, 0x400800b, 0x400800c,
    0x4008011, 0x4008014, 0x400801d, 0x4008021, 0x4008029, 0x400802d, 0x4008033, 0x400803d,
    0x4009023, 0x4009031, 0x4009039, 0x400903a, 0x400a000, 0x400a00d, 0x400a013, 0x400a032,
    0x400a03a, 0x400b002, 0x400b00a, 0x400b010, 0x400b014, 0x400b01d, 0x400b01e, 0x400b029,
    0x400b02d, 0x400b034, 0x400b039, 0x400b03c, 0x400c001, 0x400c002, 0x400c00a, 0x400c00d,
    0x400c010, 0x400c01d, 0x400d005, 0x400d013, 0x400d014, 0x400d021, 0x400d028, 0x400d02e,
    0x400d039, 0x400d03c, 0x400e004, 0x400e009, 0x400e016, 0x400e022, 0x400e02c, 0x400e032,
    0x400e038, 0x400e03f, 0x400f007, 0x400f013, 0x400f015, 0x400f01b, 0x400f020, 0x400f02e,
    0x400f03c, 0x5000002, 0x5000017, 0x500001d, 0x5001000, 0x5001009, 0x500100a, 0x500100f,
    0x500101b, 0x500101f, 0x5002003, 0x5002008, 0x500200e, 0x500201a, 0x5003014, 0x5003018,
    0x5004000, 0x5004002, 0x500400b, 0x500400e, 0x5004014, 0x500401a, 0x500401f, 0x5005009,
    0x5005017, 0x500501d, 0x5008004, 0x500800f, 0x5008015, 0x500801c, 0x500801e, 0x5009003,
    0x500900c, 0x500901b, 0x500a000, 0x500a007, 0x500a00a, 0x500a016, 0x500a01a, 0x500b011,
    0x500b018, 0x500c016, 0x500c01f, 0x500d002, 0x500d007, 0x500d009, 0x500d00b, 0x500d010,
    0x500d014, 0x500d01d, 0x500e000, 0x500e006, 0x500e009, 0x500e00e, 0x500e011, 0x500e017,
    0x500e01d, 0x500e01f, 0x500f002, 0x500f00a, 0x500f00f, 0x5010000, 0x5010005, 0x5010006,
    0x5010008, 0x5010016, 0x5010019, 0x501001e, 0x501100a, 0x501100e, 0x5011010, 0x5011014,
    0x5013011, 0x5013014, 0x5013018, 0x501301d, 0x5014019, 0x501401d, 0x5015000, 0x5015006,
    0x5015009, 0x5016001, 0x5016005, 0x501600f, 0x5016014, 0x501601c, 0x501700a, 0x5017016,
    0x501701a, 0x501701e, 0x5018000, 0x5019005, 0x5019006, 0x5019008, 0x501900e, 0x501a000,
    0x501a006, 0x501a009, 0x501a00a, 0x501a010, 0x501a017, 0x501a01e, 0x501b002, 0x501b014,
    0x501b01c, 0x501c00b, 0x501c016, 0x501c019, 0x501c01f, 0x501d002, 0x501d004, 0x501d011,
    0x501d01c, 0x501e005, 0x501e009, 0x501f003, 0x501f00a, 0x501f00d, 0x501f010, 0x501f017,
    0x501f01e, 0x600000e, 0x6001001, 0x6001004, 0x600100b, 0x6002007, 0x6003000, 0x6003004,
    0x600300b, 0x600300d, 0x600300f, 0x6004004, 0x6005001, 0x6005007, 0x600500d, 0x600600a,
    0x600600c, 0x6008005, 0x600800a, 0x600800f, 0x6009001, 0x6009007, 0x600900d, 0x600b004,
    0x600b00b, 0x600b00e, 0x6010002, 0x6010007, 0x601100a, 0x601100e, 0x6012000, 0x6013001,
    0x6013006, 0x601300d, 0x6014000, 0x6014005, 0x601400b, 0x601400d, 0x6015003, 0x6017008,
    0x601700c, 0x601800b, 0x601800f, 0x601a008, 0x601b001, 0x601b003, 0x601b004, 0x601b00a,
    0x601b00e, 0x601c003, 0x601c008, 0x601d000, 0x601d004, 0x601d00b, 0x601d00e, 0x601e007,
    0x601f001, 0x601f005, 0x6020002, 0x602000c, 0x602000f, 0x6021000, 0x6021004, 0x602100b,
    0x6022007, 0x6022008, 0x602200c, 0x6023002, 0x6023005, 0x602300b, 0x602600a, 0x602600c,
    0x602600e, 0x6027008, 0x602800e, 0x602900c, 0x602a000, 0x602a004, 0x602a00e, 0x602b003,
    0x602c002, 0x602c007, 0x602c00e, 0x602d000, 0x602d00a, 0x602e000, 0x602e004, 0x602e00d,
    0x602f00b, 0x602f00f, 0x6030000, 0x6032002, 0x6033004, 0x6033007, 0x6034000, 0x6034003,
    0x603400b, 0x6035004, 0x6035008, 0x603500f, 0x6036001, 0x603600e, 0x603700a, 0x6038005,
    0x603800b, 0x603800c, 0x603900f, 0x603a001, 0x603a002, 0x603a00e, 0x603b008, 0x603d002,
    0x603d004, 0x603e006, 0x603e00b, 0x603e00f, 0x603f001, 0x603f005, 0x603f008, 0x7000007,
    0x7002007, 0x7003000, 0x7003002, 0x7003005, 0x7005000, 0x7006002, 0x7006005, 0x7006006,
    0x7007000, 0x7008000, 0x7008002, 0x700a000, 0x700b003, 0x700b006, 0x700c003, 0x700c005,
    0x700d006, 0x7010007, 0x7011002, 0x7011005, 0x7012000, 0x7012006, 0x7013003, 0x7016002,
    0x7016007, 0x7017005, 0x7020001, 0x7021003, 0x7021005, 0x7022001, 0x7022005, 0x7023007,
    0x7025000, 0x7027003, 0x7027006, 0x7028002, 0x7028005, 0x7029000, 0x7029006, 0x702a001,
    0x702f004, 0x702f006, 0x7030005, 0x7031007, 0x7035004, 0x7036002, 0x7036007, 0x7037000,
    0x7037005, 0x7039004, 0x703a000, 0x703a005, 0x703b002, 0x703b007, 0x703c003, 0x703e000,
    0x703f002, 0x7041001, 0x7041006, 0x7042002, 0x7042005, 0x7043000, 0x7044003, 0x7044004,
    0x7045006, 0x7046005, 0x7047001, 0x7047002, 0x704d005, 0x704d006, 0x704e004, 0x7051007,
    0x7052006, 0x7054000, 0x7054002, 0x7055006, 0x7056001, 0x7058001, 0x7058007, 0x7059003,
    0x705a005, 0x705b000, 0x705c000, 0x705c006, 0x705d002, 0x705e002, 0x705e007, 0x705f005,
    0x7060000, 0x7065001, 0x7067003, 0x7068000, 0x7068005, 0x706a002, 0x706a004, 0x706b007,
    0x706c007, 0x706d000, 0x706f005, 0x7070002, 0x7070005, 0x7071006, 0x7073007, 0x7074000,
    0x7075007, 0x7076000, 0x7076004, 0x707a002, 0x707b001, 0x707c003, 0x707c005, 0x707d007,
    0x707e002, 0x707f000, 0x707f004, 0x707f007, 0x8000003, 0x8002003, 0x8004001, 0x8005003,
    0x8006001, 0x8006002, 0x800a000, 0x800d001, 0x800d003, 0x800e000, 0x8010001, 0x8015000,
    0x8016001, 0x8017003, 0x8018001, 0x8018002, 0x801a003, 0x8021003, 0x8022001, 0x8023002,
    0x8024000, 0x8024003, 0x8027001, 0x802c001, 0x802c003, 0x802f002, 0x8041000, 0x8043001,
    0x8043002, 0x8044000, 0x8044002, 0x8047003, 0x8049000, 0x804a000, 0x804e001, 0x804e003,
    0x8050001, 0x8050002, 0x8052003, 0x8053000, 0x8054000, 0x805f002, 0x8060002, 0x8062003,
    0x8066002, 0x806b002, 0x806d003, 0x806e002, 0x806f000, 0x8073002, 0x8074000, 0x8075002,
    0x8076001, 0x8076003, 0x8079001, 0x807d000, 0x807f001, 0x8082003, 0x8085001, 0x8085002,
    0x8087000, 0x8089001, 0x8089002, 0x808a003, 0x808c002, 0x808e001, 0x809b003, 0x809c002,
    0x809d003, 0x80a3003, 0x80a5003, 0x80a9000, 0x80aa003, 0x80ac000, 0x80b0000, 0x80b0003,
    0x80b2001, 0x80b5002, 0x80b6000, 0x80b9000, 0x80b9003, 0x80bb001, 0x80bc001, 0x80bc003,
    0x80be002, 0x80c0000, 0x80ca000, 0x80cc000, 0x80ce000, 0x80cf001, 0x80d1000, 0x80d1002,
    0x80d2001, 0x80d4001, 0x80d5002, 0x80d6003, 0x80d8003, 0x80da000, 0x80df002, 0x80e0002,
    0x80e3003, 0x80e6003, 0x80e8000, 0x80ea003, 0x80ec000, 0x80ed002, 0x80ef002, 0x80f5001,
    0x80f6000, 0x80f8001, 0x80f9002, 0x80fa003, 0x80fd001, 0x80ff000, 0x80ff002, 0x9001001,
    0x9004001, 0x9008000, 0x900a001, 0x900d000, 0x900d001, 0x9014000, 0x901b000, 0x901b001,
    0x901c000, 0x9020000, 0x902b000, 0x902c000, 0x902f001, 0x9031000, 0x9031001, 0x9034001,
    0x9043001, 0x9044000, 0x9046001, 0x9049000, 0x9049001, 0x904e000, 0x9058001, 0x9059000,
    0x905f001, 0x9083000, 0x9086000, 0x9087001, 0x9088000, 0x9088001, 0x908f001, 0x9093000,
    0x9095000, 0x909c001, 0x909d000, 0x90a1000, 0x90a1001, 0x90a5001, 0x90a7000, 0x90a8000,
    0x90bf001, 0x90c0001, 0x90c4001, 0x90cd001, 0x90d6001, 0x90da001, 0x90dc000, 0x90dc001,
    0x90de000, 0x90e6001, 0x90e8000, 0x90ea001, 0x90ec001, 0x90ed000, 0x90f2000, 0x90fa000,
    0x90fe000, 0x9105001, 0x9106001, 0x910b000, 0x910b001, 0x910e000, 0x9113000, 0x9113001,
    0x9114001, 0x9118001, 0x911c000, 0x9137001, 0x913b001, 0x9146001, 0x914b001, 0x9153000,
    0x9158000, 0x9160000, 0x9161001, 0x9165000, 0x916b001, 0x916d000, 0x9172001, 0x9173000,
    0x9176000, 0x9178001, 0x917d001, 0x9181000, 0x9194000, 0x9198000, 0x919c000, 0x91a2000,
    0x91a3001, 0x91a5000, 0x91a8000, 0x91aa001, 0x91ad001, 0x91b1001, 0x91b4000, 0x91bf001,
    0x91c0001, 0x91c7001, 0x91cd001, 0x91d1000, 0x91d5001, 0x91d8000, 0x91db001, 0x91de001,
    0x91ea000, 0x91ec000, 0x91f1000, 0x91f3001, 0x91f4001, 0x91fa000, 0x91ff000, 0x91ff001,
};

}  // namespace polylab::detail
