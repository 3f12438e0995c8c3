//! Reference curves used by the acceptance suite: each table pairs an
//! independent variable with the expected normalized value.

#![allow(dead_code)]

/// (q, T_q(2)/2) for the 50 plotted prime powers.
pub const FIG_TQ2: &[(u64, f64)] = &[
    (2, 0.9571067811865476),
    (3, 0.9428090415820634),
    (4, 0.9356601717798213),
    (5, 0.9313708498984761),
    (7, 0.9264687677483672),
    (8, 0.9249368670764582),
    (9, 0.9237453887760845),
    (11, 0.9220123294300864),
    (13, 0.9208125191136262),
    (16, 0.9195752147247767),
    (17, 0.9192598234099718),
    (19, 0.918728638037669),
    (23, 0.9179434074873083),
    (25, 0.9176450198781713),
    (27, 0.9173908378407581),
    (29, 0.9171717153947124),
    (31, 0.9169808668126727),
    (32, 0.9168943885489358),
    (37, 0.9165321147413897),
    (41, 0.9163059145103366),
    (43, 0.9162085958062789),
    (47, 0.916038805726859),
    (49, 0.9159643059981339),
    (53, 0.9158321744037914),
    (59, 0.9156675697905002),
    (61, 0.915619897416159),
    (64, 0.9155539754610155),
    (67, 0.9154939569645414),
    (71, 0.9154218220579811),
    (73, 0.9153887190529156),
    (79, 0.9152994666468534),
    (81, 0.9152726541956494),
    (83, 0.9152471339107686),
    (89, 0.9151774549307007),
    (97, 0.9150979586372899),
    (101, 0.9150629330426684),
    (103, 0.9150464404083077),
    (107, 0.9150153047808232),
    (109, 0.9150005939109566),
    (113, 0.9149727343874925),
    (121, 0.9149225411964579),
    (125, 0.9148998538741103),
    (127, 0.9148890461339368),
    (128, 0.9148837689170553),
    (131, 0.9148684206755905),
    (137, 0.9148397407499338),
    (139, 0.9148307309891159),
    (149, 0.9147893102766314),
    (151, 0.9147816844765845),
    (157, 0.9147599728038397),
];

/// (alpha, T_max(G_4(x, alpha x))/4) for x = 5.
pub const FIG_K4_X5: &[(f64, f64)] = &[
    (0.2, 0.9213600020051633),
    (0.4, 0.898456120565654),
    (0.6, 0.8857616523565424),
    (0.8, 0.8789821743906251),
    (1.0, 0.8757691934674999),
    (1.2, 0.8747675226276644),
    (1.4, 0.8751611060324019),
    (1.6, 0.8764415248821045),
    (1.8, 0.8782833088983639),
    (2.0, 0.8804735983236921),
];

/// (alpha, T_max(G_4(x, alpha x))/4) for x = 10.
pub const FIG_K4_X10: &[(f64, f64)] = &[
    (0.1, 0.9187255750854221),
    (0.2, 0.9043967049018443),
    (0.3, 0.893829585416946),
    (0.4, 0.8860480826703683),
    (0.5, 0.8803584051825801),
    (0.6, 0.8762583600207963),
    (0.7, 0.8733785367680282),
    (0.8, 0.8714432902801673),
    (0.9, 0.8702443124537225),
    (1.0, 0.869622391467194),
    (1.1, 0.869454605830406),
    (1.2, 0.8696451936934069),
    (1.3, 0.8701189500362378),
    (1.4, 0.870816389775256),
    (1.5, 0.8716901622245747),
    (1.6, 0.8727023640210377),
    (1.7, 0.8738225050211543),
    (1.8, 0.8750259541218651),
    (1.9, 0.8762927415177713),
    (2.0, 0.8776066282627262),
];

/// (alpha, T_max(G_4(x, alpha x))/4) for x = 100.
pub const FIG_K4_X100: &[(f64, f64)] = &[
    (0.1, 0.902131371389834),
    (0.2, 0.8903991255359038),
    (0.25, 0.8857857732564111),
    (0.35, 0.8785095203975946),
    (0.4, 0.8756751234033089),
    (0.45, 0.8732835050362988),
    (0.5, 0.8712776130729409),
    (0.55, 0.8696085585234733),
    (0.65, 0.867118539880647),
    (0.7, 0.86622987861656),
    (0.75, 0.8655410334448084),
    (0.8, 0.8650282486832416),
    (0.85, 0.8646707804735001),
    (0.9, 0.8644504687691617),
    (0.95, 0.8643513772829257),
    (1.0, 0.8643594894728199),
    (1.1, 0.864649350346985),
    (1.15, 0.8649105326672035),
    (1.25, 0.8656224704629006),
    (1.3, 0.8660588679533161),
    (1.35, 0.866540612341108),
    (1.4, 0.8670623351979839),
    (1.45, 0.8676192424853219),
    (1.5, 0.8682070480036421),
    (1.55, 0.8688219153807896),
    (1.6, 0.8694604073894953),
    (1.65, 0.8701194415724709),
    (1.7, 0.8707962513091372),
    (1.75, 0.8714883515882076),
    (1.8, 0.8721935088592496),
    (1.85, 0.8729097144277438),
    (1.9, 0.8736351609351016),
    (1.95, 0.8743682215300308),
    (2.0, 0.8751074313925921),
];

/// (alpha, T_max(G_4(x, alpha x))/4) for x = 1000.
pub const FIG_K4_X1000: &[(f64, f64)] = &[
    (0.1, 0.9005498037811536),
    (0.15, 0.8943510117470369),
    (0.2, 0.8890596731054877),
    (0.25, 0.8845466229612836),
    (0.3, 0.8807035344913251),
    (0.35, 0.8774391095379991),
    (0.4, 0.8746760462425882),
    (0.45, 0.8723486094917503),
    (0.5, 0.8704006723611681),
    (0.55, 0.8687841280553594),
    (0.6, 0.867457595156319),
    (0.65, 0.8663853564869639),
    (0.7, 0.865536485119271),
    (0.75, 0.8648841211243656),
    (0.8, 0.8644048703777965),
    (0.85, 0.864078302684998),
    (0.9, 0.8638865311110088),
    (0.95, 0.8638138580042428),
    (1.0, 0.863846476034553),
    (1.05, 0.8639722147995464),
    (1.1, 0.8641803253249442),
    (1.15, 0.8644612961971156),
    (1.2, 0.864806696197009),
    (1.25, 0.8652090392146247),
    (1.3, 0.8656616679583733),
    (1.35, 0.8661586535701457),
    (1.4, 0.8666947087428107),
    (1.45, 0.8672651123341876),
    (1.5, 0.8678656437976542),
    (1.55, 0.8684925260181855),
    (1.6, 0.8691423753646523),
    (1.65, 0.8698121579533529),
    (1.7, 0.8704991512709573),
    (1.75, 0.8712009104329048),
    (1.8, 0.8719152384603287),
    (1.85, 0.8726401600484387),
    (1.9, 0.8733738983749405),
    (1.95, 0.8741148545609355),
    (2.0, 0.8748615894507932),
];

pub fn fig_k4_series() -> [(u64, &'static [(f64, f64)]); 4] {
    [(5, FIG_K4_X5), (10, FIG_K4_X10), (100, FIG_K4_X100), (1000, FIG_K4_X1000)]
}

/// (k, bound/k) at p = P = 2/(k^2+k) for k = 3..=200.
pub const FIG_UBFIN: &[(usize, f64)] = &[
    (3, 0.8822222222222222),
    (4, 0.8637896195515243),
    (5, 0.8524875052061641),
    (6, 0.844943782635437),
    (7, 0.8396070024029031),
    (8, 0.8356678544757822),
    (9, 0.8326647750225656),
    (10, 0.8303163157552945),
    (11, 0.8284416727701543),
    (12, 0.8269197343122558),
    (13, 0.8256665387547371),
    (14, 0.8246221832074568),
    (15, 0.823742874845907),
    (16, 0.8229959201320368),
    (17, 0.8223564629308101),
    (18, 0.8218053012041373),
    (19, 0.8213273896354447),
    (20, 0.8209107903919585),
    (21, 0.8205459237303753),
    (22, 0.8202250235309607),
    (23, 0.8199417355842994),
    (24, 0.8196908170432182),
    (25, 0.8194679086941952),
    (26, 0.8192693603945633),
    (27, 0.8190920958340131),
    (28, 0.818933506731762),
    (29, 0.8187913693111866),
    (30, 0.8186637778069019),
    (31, 0.8185490911176712),
    (32, 0.8184458896948832),
    (33, 0.8183529404661419),
    (34, 0.8182691681150296),
    (35, 0.8181936314251026),
    (36, 0.8181255036860305),
    (37, 0.818064056378772),
    (38, 0.8180086455234935),
    (39, 0.8179587002019825),
    (40, 0.8179137128653151),
    (41, 0.817873231114626),
    (42, 0.8178368507032328),
    (43, 0.817804209556003),
    (44, 0.8177749826396278),
    (45, 0.8177488775475988),
    (46, 0.817725630687843),
    (47, 0.8177050039804402),
    (48, 0.8176867819886167),
    (49, 0.8176707694190261),
    (50, 0.8176567889378178),
    (51, 0.8176446792575868),
    (52, 0.8176342934573819),
    (53, 0.8176254975038161),
    (54, 0.8176181689461774),
    (55, 0.8176121957624993),
    (56, 0.817607475336932),
    (57, 0.8176039135516),
    (58, 0.8176014239785212),
    (59, 0.8175999271591813),
    (60, 0.8175993499610642),
    (61, 0.8175996250018898),
    (62, 0.817600690133545),
    (63, 0.8176024879787473),
    (64, 0.8176049655143808),
    (65, 0.8176080736962171),
    (66, 0.817611767120403),
    (67, 0.8176160037176629),
    (68, 0.8176207444766649),
    (69, 0.8176259531934248),
    (70, 0.8176315962439953),
    (71, 0.8176376423780097),
    (72, 0.8176440625309338),
    (73, 0.8176508296531204),
    (74, 0.8176579185539812),
    (75, 0.8176653057597746),
    (76, 0.8176729693836767),
    (77, 0.8176808890069435),
    (78, 0.8176890455701054),
    (79, 0.8176974212732439),
    (80, 0.817705999484501),
    (81, 0.8177147646560605),
    (82, 0.8177237022469185),
    (83, 0.8177327986518282),
    (84, 0.8177420411358682),
    (85, 0.8177514177741346),
    (86, 0.8177609173961107),
    (87, 0.8177705295343074),
    (88, 0.817780244376808),
    (89, 0.8177900527233876),
    (90, 0.8177999459449042),
    (91, 0.8178099159456923),
    (92, 0.817819955128708),
    (93, 0.8178300563632048),
    (94, 0.8178402129547329),
    (95, 0.8178504186172768),
    (96, 0.8178606674473624),
    (97, 0.8178709538999769),
    (98, 0.8178812727661623),
    (99, 0.8178916191521524),
    (100, 0.8179019884599347),
    (101, 0.8179123763691307),
    (102, 0.817922778820093),
    (103, 0.8179331919981317),
    (104, 0.8179436123187834),
    (105, 0.8179540364140491),
    (106, 0.8179644611195279),
    (107, 0.817974883462385),
    (108, 0.8179853006500915),
    (109, 0.8179957100598821),
    (110, 0.8180061092288824),
    (111, 0.818016495844854),
    (112, 0.8180268677375205),
    (113, 0.8180372228704297),
    (114, 0.8180475593333183),
    (115, 0.8180578753349431),
    (116, 0.8180681691963492),
    (117, 0.8180784393445435),
    (118, 0.8180886843065502),
    (119, 0.8180989027038192),
    (120, 0.8181090932469668),
    (121, 0.8181192547308268),
    (122, 0.8181293860297916),
    (123, 0.8181394860934245),
    (124, 0.8181495539423261),
    (125, 0.8181595886642398),
    (126, 0.8181695894103791),
    (127, 0.8181795553919657),
    (128, 0.8181894858769626),
    (129, 0.8181993801869918),
    (130, 0.8182092376944256),
    (131, 0.8182190578196392),
    (132, 0.818228840028417),
    (133, 0.818238583829501),
    (134, 0.8182482887722754),
    (135, 0.8182579544445769),
    (136, 0.8182675804706251),
    (137, 0.8182771665090649),
    (138, 0.8182867122511145),
    (139, 0.8182962174188134),
    (140, 0.8183056817633639),
    (141, 0.8183151050635615),
    (142, 0.8183244871243082),
    (143, 0.8183338277752048),
    (144, 0.8183431268692175),
    (145, 0.8183523842814142),
    (146, 0.8183615999077677),
    (147, 0.81837077366402),
    (148, 0.818379905484607),
    (149, 0.8183889953216384),
    (150, 0.81839804314393),
    (151, 0.818407048936086),
    (152, 0.8184160126976288),
    (153, 0.8184249344421726),
    (154, 0.8184338141966401),
    (155, 0.8184426520005184),
    (156, 0.8184514479051522),
    (157, 0.8184602019730748),
    (158, 0.8184689142773703),
    (159, 0.8184775849010699),
    (160, 0.8184862139365776),
    (161, 0.8184948014851253),
    (162, 0.8185033476562549),
    (163, 0.8185118525673258),
    (164, 0.8185203163430487),
    (165, 0.8185287391150402),
    (166, 0.8185371210214019),
    (167, 0.818545462206319),
    (168, 0.8185537628196792),
    (169, 0.8185620230167108),
    (170, 0.8185702429576385),
    (171, 0.8185784228073563),
    (172, 0.8185865627351163),
    (173, 0.818594662914234),
    (174, 0.8186027235218065),
    (175, 0.8186107447384459),
    (176, 0.8186187267480259),
    (177, 0.81862666973744),
    (178, 0.818634573896373),
    (179, 0.818642439417082),
    (180, 0.8186502664941908),
    (181, 0.8186580553244918),
    (182, 0.8186658061067597),
    (183, 0.8186735190415735),
    (184, 0.818681194331148),
    (185, 0.8186888321791732),
    (186, 0.8186964327906615),
    (187, 0.8187039963718038),
    (188, 0.8187115231298312),
    (189, 0.818719013272885),
    (190, 0.8187264670098925),
    (191, 0.8187338845504496),
    (192, 0.8187412661047087),
    (193, 0.8187486118832732),
    (194, 0.8187559220970965),
    (195, 0.8187631969573871),
    (196, 0.8187704366755176),
    (197, 0.8187776414629399),
    (198, 0.8187848115311027),
    (199, 0.8187919470913756),
    (200, 0.8187990483549756),
];
