# Generated by incgamneg.gencoeffs; do not edit by hand.
# sha256: 965b3d1a38ac597e5abcfa0cf1293882122144a4d0660051da66546753f61e84
# D_COEFFS[n] = (num, den) of d_n in eta/(lambda-1) = sum d_n eta**n.
# GAMMA_RECIP[n] = (num, den) of gamma_n in 1/Gamma*(a) ~ sum gamma_n a**-n.
# C_RECORDS: (n, ((p, num, den), ...), ((q, num, den),)) meaning
#   C_n = sum num/den * (lambda-1)**p + sum num/den * eta**-q.
# C_LAMBDA: (n, ((j, num, den), ...)) giving the same mu-part as
#   (sum num/den * lambda**j) / (lambda-1)**(2n+1).

D_COEFFS = (
    (1, 1),
    (-1, 3),
    (1, 12),
    (-2, 135),
    (1, 864),
    (1, 2835),
    (-139, 777600),
    (1, 25515),
    (-571, 261273600),
    (-281, 151559100),
    (163879, 197522841600),
    (-5221, 29554024500),
    (5246819, 782190452736000),
    (5459, 531972441000),
    (-534703531, 122021710626816000),
    (91207079, 99704934754425000),
    (-4483131259, 175711263302615040000),
    (-2650986803, 45465450248017800000),
    (432261921612371, 17743323368298066739200000),
    (-6171801683, 1227567156696480600000),
    (6232523202521089, 56636688191607429031526400000),
    (4283933145517, 12705320071808574210000000),
    (-25834629665134204969, 185541790515705937507280486400000),
    (11963983648109, 419275562369682948930000000),
    (-1579029138854919086429, 3072572050940090325120564854784000000),
    (-208697624924077, 105657441717160103130360000000),
    (746590869962651602203151, 921771615282027097536169456435200000000),
    (-29320119130515566117, 177455371374430493811049182600000000),
    (1511513601028097903631961, 597308006702753559203437807770009600000000),
    (2700231121460756431181, 231046893529508502941986035745200000000),
    (-8849272268392873147705987190261, 1855178938018082279529957487152872816640000000000),
    (10084288256532215186381, 10397110208827882632389371608534000000000),
    (-6208770108287283939483943525987, 480088045177548944685317694066691261071360000000000),
    (-6782242429223267933535073, 97316951554628981439164518255878240000000000),
    (2355444393109967510921431436000087153, 83080196394065199975683597593629056110920990720000000000),
    (-51748587106835353426330148693, 8998217291595659510809468851493269705120000000000),
    (2346608607351903737647919577082115121863, 34544745660652310149889239879430961530920947941376000000000000),
    (7007277101869903281324331583, 16755301163660883227024528206228847037120000000000),
    (-2603072187220373277150999431416562396331667, 15337867073329625706550822506467346919728900885970944000000000000),
    (585302872633292617248814587726421, 17033355386471835584177000251811214753701006400000000000),
    (-73239727426811935976967471475430268695630993, 200987410128911415258641978124748114036127517209763250176000000000000),
    (-110855495796575034381969281033555329, 43946056897097335807176660649672934064548596512000000000000),
    (34856851734234401648335623107688675640839679447003, 34115602995281423626001889366894744876492284771185214084874240000000000000),
    (-18447986573777204063499607563765439, 89309728532810714704907407126754672453760050976000000000000),
    (909773124599542506852275229422593983242880452145053, 457694929784695579366441347746259897263020492490220832162672803840000000000000),
    (38650132745379700438031566826935471987259957, 2529440227971075696123684974426321512851113061316034836800000000000000),
    (-1527335577854677023023224272800947125313629267269390501, 247155262083735612857878327782980344522031065944719249367843314073600000000000000),
    (217784448556937372678947372805330071920344629, 174531375730004223032534263235416184386726801230806403739200000000000000),
    (-183856455668177802003316143799518064719008299958634826921, 16727468137827226278221205224352109717251062543138598797215635496501248000000000000000),
    (-1167289109751840227800236733417523750884898531, 12566259052560304058342466952949965275844329688618061069222400000000000000),
    (2583312098861137963745902036370496943872138148651712093816393, 68850258855296863361158480703433283596205373427558472649339555703599136768000000000000000),
    (-107748081854646619391722638838074116233224341741059, 14236000724169254460094722249323191911872144995993185933795326400000000000000000),
    (5180134290822682443757710427952467581918233549140896702364013, 84272716838883360754057980381002339121755377075331570522791616181205343404032000000000000000),
    (27346403208634415483181063970969158506217340077059, 48278611151530515125538623280313433440262056942933413166784150400000000000000000),
    (-527550309097873396592733540579928993424142983691519876840948418433873, 2308174094223901588035550404368602607001059419544461997782717324736534760309789818880000000000000000),
    (377036553764192941179202019520271416437725306277603527, 8184817784352422820777939420581377311427947299706330334404417369763200000000000000000),
    (-2114866241537081164613223324215572812504648703648482437460602956015127, 6093579608751100192413853067533110882482796867597379674146373737304451767217845121843200000000000000000),
    (-2107144283266473668026539971128155003797327940672559775477, 608459354088759112496632016526019589331553602260168597059624387268196288000000000000000000),
    (180394412915538782140015777241228025103785450235726235175126981743099027459, 129208262023958328479943340443972083152165224780534838610599708725803595272087187963563212800000000000000000),
    (-907975882295290895046750344009772888231118193554130319911809, 3229093792149044610019626111703585960582554967194714744595426623232317700416000000000000000000),
    (3226140192053936286912811949056082647586604417173687729452086326364208020303641, 1632908173806380563663827947862830392460433677731443183393036998934960676329583464045919170723840000000000000000000),
    (6167361425787997953566261268364566691289295415465849571477591, 290618441293414014901766350053322736452429947047524327013588396090908593037440000000000000000000),
    (-10218654456520534088469164280902985100842191028132480093114328858063973003580356809, 1195288783226270572601922057835591847281037452099416410243703083220391215073255095681612832969850880000000000000000000),
    (529474276874328737096972133059844331069519494253943353663978654111, 307708258733673226048064720268208379969515090083653995063622461723034472851006659200000000000000000000),
)

GAMMA_RECIP = (
    (1, 1),
    (-1, 12),
    (1, 288),
    (139, 51840),
    (-571, 2488320),
    (-163879, 209018880),
    (5246819, 75246796800),
    (534703531, 902961561600),
    (-4483131259, 86684309913600),
    (-432261921612371, 514904800886784000),
    (6232523202521089, 86504006548979712000),
    (25834629665134204969, 13494625021640835072000),
    (-1579029138854919086429, 9716130015581401251840000),
    (-746590869962651602203151, 116593560186976815022080000),
    (1511513601028097903631961, 2798245444487443560529920000),
    (8849272268392873147705987190261, 299692087104605205332754432000000),
    (-142801712490607530608130701097701, 57540880724084199423888850944000000),
    (-2355444393109967510921431436000087153, 13119320805091197468646658015232000000),
    (2346608607351903737647919577082115121863, 155857531164483425927522297220956160000000),
    (2603072187220373277150999431416562396331667, 1870290373973801111130267566651473920000000),
    (-73239727426811935976967471475430268695630993, 628417565655197173339769902394895237120000000),
    (-34856851734234401648335623107688675640839679447003, 2601648721812516297626647395914866281676800000000),
    (909773124599542506852275229422593983242880452145053, 811714401205505084859513987525438279883161600000000),
    (1527335577854677023023224272800947125313629267269390501, 9740572814466061018314167850305259358597939200000000),
    (-183856455668177802003316143799518064719008299958634826921, 14026424852831127866372401704439573476381032448000000000),
    (-2583312098861137963745902036370496943872138148651712093816393, 1178219687637814740775281743172924172016006725632000000000),
)

C_RECORDS = (
    (0, (
        (-1, 1, 1),
    ), ((1, -1, 1),)),
    (1, (
        (-3, -1, 1),
        (-2, -1, 1),
        (-1, -1, 12),
    ), ((3, 1, 1),)),
    (2, (
        (-5, 3, 1),
        (-4, 5, 1),
        (-3, 25, 12),
        (-2, 1, 12),
        (-1, 1, 288),
    ), ((5, -3, 1),)),
    (3, (
        (-7, -15, 1),
        (-6, -35, 1),
        (-5, -105, 4),
        (-4, -77, 12),
        (-3, -49, 288),
        (-2, -1, 288),
        (-1, 139, 51840),
    ), ((7, 15, 1),)),
    (4, (
        (-9, 105, 1),
        (-8, 315, 1),
        (-7, 1365, 4),
        (-6, 1883, 12),
        (-5, 2513, 96),
        (-4, 149, 288),
        (-3, 221, 51840),
        (-2, -139, 51840),
        (-1, -571, 2488320),
    ), ((9, -105, 1),)),
    (5, (
        (-11, -945, 1),
        (-10, -3465, 1),
        (-9, -19635, 4),
        (-8, -13321, 4),
        (-7, -102949, 96),
        (-6, -38291, 288),
        (-5, -35981, 17280),
        (-4, -77, 10368),
        (-3, 2783, 497664),
        (-2, 571, 2488320),
        (-1, -163879, 209018880),
    ), ((11, 945, 1),)),
    (6, (
        (-13, 10395, 1),
        (-12, 45045, 1),
        (-11, 315315, 4),
        (-10, 283283, 4),
        (-9, 3278275, 96),
        (-8, 797225, 96),
        (-7, 2792933, 3456),
        (-6, 108251, 10368),
        (-5, 715, 55296),
        (-4, -42887, 2488320),
        (-3, 67951, 209018880),
        (-2, 163879, 209018880),
        (-1, 5246819, 75246796800),
    ), ((13, -10395, 1),)),
    (7, (
        (-15, -135135, 1),
        (-14, -675675, 1),
        (-13, -5630625, 4),
        (-12, -6301295, 4),
        (-11, -32497465, 32),
        (-10, -35882275, 96),
        (-9, -249151331, 3456),
        (-8, -2196337, 384),
        (-7, -1155869, 18432),
        (-6, 10673, 2488320),
        (-5, 4735393, 69672960),
        (-4, -531611, 209018880),
        (-3, -123239699, 75246796800),
        (-2, -5246819, 75246796800),
        (-1, 534703531, 902961561600),
    ), ((15, 135135, 1),)),
    (8, (
        (-17, 2027025, 1),
        (-16, 11486475, 1),
        (-15, 111035925, 4),
        (-14, 148813665, 4),
        (-13, 962396435, 32),
        (-12, 1431239095, 96),
        (-11, 561480777, 128),
        (-10, 266722027, 384),
        (-9, 851484491, 18432),
        (-8, 364077389, 829440),
        (-7, -25470029, 69672960),
        (-6, -9843493, 29859840),
        (-5, 54058997, 3583180800),
        (-4, 10863221, 2149908480),
        (-3, -2335885, 5159780352),
        (-2, -534703531, 902961561600),
        (-1, -4483131259, 86684309913600),
    ), ((17, -2027025, 1),)),
    (9, (
        (-19, -34459425, 1),
        (-18, -218243025, 1),
        (-17, -2400673275, 4),
        (-16, -3748930185, 4),
        (-15, -29178284135, 32),
        (-14, -18236110035, 32),
        (-13, -29076114067, 128),
        (-12, -21196085911, 384),
        (-11, -45229977793, 6144),
        (-10, -347763837967, 829440),
        (-9, -6985191863, 1990656),
        (-8, 9031403, 1990656),
        (-7, 272680799, 143327232),
        (-6, -41125975, 429981696),
        (-5, -2001631, 106168320),
        (-4, 2295746687, 902961561600),
        (-3, 107146209211, 86684309913600),
        (-2, 4483131259, 86684309913600),
        (-1, -432261921612371, 514904800886784000),
    ), ((19, 34459425, 1),)),
    (10, (
        (-21, 654729075, 1),
        (-20, 4583103525, 1),
        (-19, 56524943475, 4),
        (-18, 100794328635, 4),
        (-17, 917537325705, 32),
        (-16, 692979802515, 32),
        (-15, 1399211644831, 128),
        (-14, 462773826515, 128),
        (-13, 4567178250635, 6144),
        (-12, 14128831080455, 165888),
        (-11, 2803066279325, 663552),
        (-10, 62794475543, 1990656),
        (-9, -7110853721, 143327232),
        (-8, -608837881, 47775744),
        (-7, 383051837, 573308928),
        (-6, 75936371527, 902961561600),
        (-5, -401001785147, 28894769971200),
        (-4, -47200698593, 12383472844800),
        (-3, 379002322255451, 514904800886784000),
        (-2, 432261921612371, 514904800886784000),
        (-1, 6232523202521089, 86504006548979712000),
    ), ((21, -654729075, 1),)),
    (11, (
        (-23, -13749310575, 1),
        (-22, -105411381075, 1),
        (-21, -1440622208025, 4),
        (-20, -2888271841455, 4),
        (-19, -30112517860425, 32),
        (-18, -26685811377225, 32),
        (-17, -65338882033425, 128),
        (-16, -27467008243675, 128),
        (-15, -370357328676335, 6144),
        (-14, -590875179646115, 55296),
        (-13, -709017620934415, 663552),
        (-12, -93129131973155, 1990656),
        (-11, -5016447189719, 15925248),
        (-10, 26203264211, 47775744),
        (-9, 55767073717, 573308928),
        (-8, -1559588244029, 300987187200),
        (-7, -12574774407449, 28894769971200),
        (-6, 7336646337809, 86684309913600),
        (-5, 2237804407740469, 171634933628928000),
        (-4, -400306161998219, 102980960177356800),
        (-3, -30294505772855549, 17300801309795942400),
        (-2, -6232523202521089, 86504006548979712000),
        (-1, 25834629665134204969, 13494625021640835072000),
    ), ((23, 13749310575, 1),)),
    (12, (
        (-25, 316234143225, 1),
        (-24, 2635284526875, 1),
        (-23, 39529267903125, 4),
        (-22, 88018503197625, 4),
        (-21, 1034261333980875, 32),
        (-20, 1052482444138125, 32),
        (-19, 3032139413728425, 128),
        (-18, 1550233126467025, 128),
        (-17, 8883340753762475, 2048),
        (-16, 58270491886350835, 55296),
        (-15, 108484259252694715, 663552),
        (-14, 355175762964445, 24576),
        (-13, 8995577588509789, 15925248),
        (-12, 165280724618617, 47775744),
        (-11, -1215431789591, 191102976),
        (-10, -251022717360593, 300987187200),
        (-9, 257157438453283, 5778953994240),
        (-8, 2934005127061, 1155790798848),
        (-7, -19669676106374653, 34326986725785600),
        (-6, -5112188575228531, 102980960177356800),
        (-5, 7997539070697107, 384462251328798720),
        (-4, 42443875727079583, 7864000595361792000),
        (-3, -23890082425947625201, 13494625021640835072000),
        (-2, -25834629665134204969, 13494625021640835072000),
        (-1, -1579029138854919086429, 9716130015581401251840000),
    ), ((25, -316234143225, 1),)),
    (13, (
        (-27, -7905853580625, 1),
        (-26, -71152682225625, 1),
        (-25, -1162160476351875, 4),
        (-24, -2845580232119625, 4),
        (-23, -37210744576380375, 32),
        (-22, -42769136896360875, 32),
        (-21, -141809244391890075, 128),
        (-20, -85514845137246525, 128),
        (-19, -597483933236465275, 2048),
        (-18, -5009781276158589385, 55296),
        (-17, -1423910925663309005, 73728),
        (-16, -587173442396993645, 221184),
        (-15, -3339097030264072297, 15925248),
        (-14, -117603631549101725, 15925248),
        (-13, -7920105032008115, 191102976),
        (-12, 4713516585654001, 60197437440),
        (-11, 15293981595718103, 1926317998080),
        (-10, -2431777151161987, 5778953994240),
        (-9, -559431885445071029, 34326986725785600),
        (-8, 49304036631693211, 11442328908595200),
        (-7, 372626643658167797, 1922311256643993600),
        (-6, -221729836459709123, 1765387888754688000),
        (-5, -1494316433420621647, 91800170215243776000),
        (-4, 17619929515444469363, 1927803574520119296000),
        (-3, 5540127979521167748827, 1388018573654485893120000),
        (-2, 1579029138854919086429, 9716130015581401251840000),
        (-1, -746590869962651602203151, 116593560186976815022080000),
    ), ((27, 7905853580625, 1),)),
    (14, (
        (-29, 213458046676875, 1),
        (-28, 2063427784543125, 1),
        (-27, 36453890860261875, 4),
        (-26, 97347937479667875, 4),
        (-25, 1402198529823716625, 32),
        (-24, 1796768136976687875, 32),
        (-23, 6741678179109448575, 128),
        (-22, 4688291034974622075, 128),
        (-21, 38716945175411728225, 2048),
        (-20, 44076146746795699445, 6144),
        (-19, 144441236364082398325, 73728),
        (-18, 82014232287180657575, 221184),
        (-17, 242170087031765921165, 5308416),
        (-16, 51732906295648508605, 15925248),
        (-15, 19860371465665195295, 191102976),
        (-14, 10792089302348460971, 20065812480),
        (-13, -282603452349147931, 275188285440),
        (-12, -68626231592439647, 825564856320),
        (-11, 2372737297587740747, 544872805171200),
        (-10, 16673550172489187, 148601674137600),
        (-9, -894454697903933119, 24965081255116800),
        (-8, -225925631312417203, 374476218826752000),
        (-7, 6968299194775668601, 8345470019567616000),
        (-6, 7856682495217035953, 175254870410919936000),
        (-5, -2041387301304350757937, 42061168898620784640000),
        (-4, -434548166718743130539, 35331381874841459097600),
        (-3, 12885348556911518984161, 2119882912490487545856000),
        (-2, 746590869962651602203151, 116593560186976815022080000),
        (-1, 1511513601028097903631961, 2798245444487443560529920000),
    ), ((29, -213458046676875, 1),)),
    (15, (
        (-31, -6190283353629375, 1),
        (-30, -63966261320836875, 1),
        (-29, -1215358965095900625, 4),
        (-28, -3515301427698435375, 4),
        (-27, -55303334241363833625, 32),
        (-26, -78177398533033424625, 32),
        (-25, -327548339269279353225, 128),
        (-24, -258201000888959002875, 128),
        (-23, -2463334292994713263125, 2048),
        (-22, -3320690480986852867075, 6144),
        (-21, -13322658710148533434975, 73728),
        (-20, -3236468884640649513625, 73728),
        (-19, -39547039827602064732205, 5308416),
        (-18, -13178400939350438117095, 15925248),
        (-17, -3410207860249830527195, 63700992),
        (-16, -4490167758379365863317, 2866544640),
        (-15, -2068407301170365583329, 275188285440),
        (-14, 1316116602302893897, 91729428480),
        (-13, 47038149448968805093, 49533891379200),
        (-12, -7284947394488114111, 148601674137600),
        (-11, -6653824002882145363, 8321693751705600),
        (-10, 122558789267530308689, 374476218826752000),
        (-9, -11898294533222218421, 11683658027394662400),
        (-8, -71432005106888366671, 11683658027394662400),
        (-7, -2432277552946764797, 92442129447518208000),
        (-6, 51560096661766228527457, 176656909374207295488000),
        (-5, 7292834926862643819653, 235542545832276393984000),
        (-4, -517037750259386262398981, 16656222883853830717440000),
        (-3, -2872913489171951908414093, 215249649575957196963840000),
        (-2, -1511513601028097903631961, 2798245444487443560529920000),
        (-1, 8849272268392873147705987190261, 299692087104605205332754432000000),
    ), ((31, 6190283353629375, 1),)),
    (16, (
        (-33, 191898783962510625, 1),
        (-32, 2110886623587616875, 1),
        (-31, 42921361346281543125, 4),
        (-30, 133673849963337308625, 4),
        (-29, 2280617544321273031875, 32),
        (-28, 3525802386375692548125, 32),
        (-27, 16319157929167459991625, 128),
        (-26, 14385532503066999899625, 128),
        (-25, 155805873080238662155875, 2048),
        (-24, 243025256798345978231275, 6144),
        (-23, 385479373297882786347425, 24576),
        (-22, 344505210605932192406975, 73728),
        (-21, 5411908950606974529531895, 5308416),
        (-20, 830464162360541858614465, 5308416),
        (-19, 1006818401257478663393155, 63700992),
        (-18, 2680651697225190207117247, 2866544640),
        (-17, 769769309598695716644983, 30576476160),
        (-16, 10323610873419587402087, 91729428480),
        (-15, -10561337456246472327529, 49533891379200),
        (-14, -116471230651728401953, 9906778275840),
        (-13, 993735342625543256317, 1664338750341120),
        (-12, 413610997750271773559, 74895243765350400),
        (-11, -1815774171460497921199, 556364667971174400),
        (-10, 678540691654106899157, 11683658027394662400),
        (-9, 412997710216904081200649, 8412233779724156928000),
        (-8, -10252740857215870313899, 6542848495341010944000),
        (-7, -16627590664016409159923, 8723797993788014592000),
        (-6, -3572709436722228106469707, 116593560186976815022080000),
        (-5, 153164331417337897586754953, 932748481495814520176640000),
        (-4, 115066653279762320235413549, 2798245444487443560529920000),
        (-3, -775046005004786779704365558551, 27244735191327745939341312000000),
        (-2, -8849272268392873147705987190261, 299692087104605205332754432000000),
        (-1, -142801712490607530608130701097701, 57540880724084199423888850944000000),
    ), ((33, -191898783962510625, 1),)),
    (17, (
        (-35, -6332659870762850625, 1),
        (-34, -73881031825566590625, 1),
        (-33, -1600755689553942796875, 4),
        (-32, -5340777700634847095625, 4),
        (-31, -98219632776517871994375, 32),
        (-30, -164860375603836309271875, 32),
        (-29, -835507131361598985163875, 128),
        (-28, -814641109167263417164125, 128),
        (-27, -9879528348281838512140875, 2048),
        (-26, -5839348881392734379747075, 2048),
        (-25, -32196450238492517996193175, 24576),
        (-24, -34177191390884420490925775, 73728),
        (-23, -219782113854181019297606065, 1769472),
        (-22, -130259371209957302292459095, 5308416),
        (-21, -218440948590422140671941545, 63700992),
        (-20, -101009051513910853436584219, 318504960),
        (-19, -105554240826082869389895227, 6115295232),
        (-18, -7884682512701638989465505, 18345885696),
        (-17, -5935838525633435871274583, 3302259425280),
        (-16, 33314609597863614609929, 9906778275840),
        (-15, 52204355007746627812267, 332867750068224),
        (-14, -195432835802982022076051, 24965081255116800),
        (-13, -118278651393711246768493, 3894552675798220800),
        (-12, 31742955899294919292723, 898742925184204800),
        (-11, -24508468295902297449391, 23966478004912128000),
        (-10, -72024667811810297587009, 167765346034384896000),
        (-9, 52097470105788649415627, 2013184152412618752000),
        (-8, 40436679517753551989626013, 2989578466332738846720000),
        (-7, -45717815701847887601786833, 71749883191985732321280000),
        (-6, -19284836254399424788412437, 19568149961450654269440000),
        (-5, -608154771792108057913002588703, 7684412489861671931609088000000),
        (-4, 665770195414518615779323658657, 4610647493917003158965452800000),
        (-3, 10895145426318371751776091637409, 177048863766412921304273387520000),
        (-2, 142801712490607530608130701097701, 57540880724084199423888850944000000),
        (-1, -2355444393109967510921431436000087153, 13119320805091197468646658015232000000),
    ), ((35, 6332659870762850625, 1),)),
    (18, (
        (-37, 221643095476699771875, 1),
        (-36, 2733598177545963853125, 1),
        (-35, 62872758083557168621875, 4),
        (-34, 223729824175595219356875, 4),
        (-33, 4412047707434574888305625, 32),
        (-32, 7990619884187143309981875, 32),
        (-31, 44012951881946727682377375, 128),
        (-30, 47039657866169746250347875, 128),
        (-29, 631706482310543650717331625, 2048),
        (-28, 418570336319820733701227575, 2048),
        (-27, 2626788106956846076385916775, 24576),
        (-26, 1078328787089388313832235575, 24576),
        (-25, 24741050859795589646618185895, 1769472),
        (-24, 18030672022557550981968918575, 5308416),
        (-23, 4330637102203065862146663725, 7077888),
        (-22, 4991296126454508367857109321, 63700992),
        (-21, 40793006357037342238056349409, 6115295232),
        (-20, 2052838670771784352344802343, 6115295232),
        (-19, 25647280596089078735679904111, 3302259425280),
        (-18, 302194731053739411601244869, 9906778275840),
        (-17, -31154999074879464385803059, 554779583447040),
        (-16, -55993839682473207979735661, 24965081255116800),
        (-15, 32950995066294690955545061, 299580975061401600),
        (-14, -2897724067822810134133, 99860325020467200),
        (-13, -3296050912173149633909353, 7988826001637376000),
        (-12, 869132912300859959824399, 55921782011461632000),
        (-11, 2724694302155045955233479, 671061384137539584000),
        (-10, -1019776124105893715356862959, 2989578466332738846720000),
        (-9, -1488763551499149353759137333, 14349976638397146464256000),
        (-8, 148858221501944511711516289, 14349976638397146464256000),
        (-7, 9695941008315292995204479400583, 1536882497972334386321817600000),
        (-6, -10891122938724029732185543747, 59878538882039002064486400000),
        (-5, -510006569518613660767318174157, 669118910681832657990451200000),
        (-4, -31802828617030984020985279150639, 167757669749516616396177408000000),
        (-3, 46741363514576540346206608904072153, 267741240920228519768299143168000000),
        (-2, 2355444393109967510921431436000087153, 13119320805091197468646658015232000000),
        (-1, 2346608607351903737647919577082115121863, 155857531164483425927522297220956160000000),
    ), ((37, -221643095476699771875, 1),)),
    (19, (
        (-39, -8200794532637891559375, 1),
        (-38, -106610328924292590271875, 1),
        (-37, -2594184670491119696615625, 4),
        (-36, -9807360554894738359899375, 4),
        (-35, -206452086521102870979155625, 32),
        (-34, -401297410639329557233505625, 32),
        (-33, -2387200853516302901831378625, 128),
        (-32, -2775591244325440945664134875, 128),
        (-31, -40898523762767244070969597125, 2048),
        (-30, -30039457403960746414436989225, 2048),
        (-29, -70520970630431536862010739375, 8192),
        (-28, -98959827352158940222057877875, 24576),
        (-27, -2637157760926224664659399643775, 1769472),
        (-26, -254257215891783383007068665325, 589824),
        (-25, -676586158072512146252378660075, 7077888),
        (-24, -1006250394938033817557215796137, 63700992),
        (-23, -3799423517523235286637799407847, 2038431744),
        (-22, -897709906913219874046079384449, 6115295232),
        (-21, -22657955975660963501301783482509, 3302259425280),
        (-20, -489111499712014932447525647323, 3302259425280),
        (-19, -304082653917896375999496175949, 554779583447040),
        (-18, 24729475727202361582815110711, 24965081255116800),
        (-17, 379872307149645761769484111, 11095591668940800),
        (-16, -18301600799391548381760827, 11095591668940800),
        (-15, 46094112814212492591050549, 7988826001637376000),
        (-14, 57902207612029259433571667, 11184356402292326400),
        (-13, -886438723971596226984467, 3834636480785940480),
        (-12, -3523596658172831139504228823, 85416527609506824192000),
        (-11, 2968958377170249643855317049, 683332220876054593536000),
        (-10, 348800176899336802575431591, 409999332525632756121600),
        (-9, -3988026760021900175527724739169, 31364948938210905843302400000),
        (-8, -450301728745874492433161782769, 10454982979403635281100800000),
        (-7, 68885390897177868243485653882261, 14051497124318485817799475200000),
        (-6, 5365786848802702425820804794445567, 1174303688246616314773241856000000),
        (-5, 20935055782465393650450065128487639, 89247080306742839922766381056000000),
        (-4, -11581869222862686452735234380898780797, 13119320805091197468646658015232000000),
        (-3, -3430115728684984223361242970379069757479, 9168090068499025054560135130644480000000),
        (-2, -2346608607351903737647919577082115121863, 155857531164483425927522297220956160000000),
        (-1, 2603072187220373277150999431416562396331667, 1870290373973801111130267566651473920000000),
    ), ((39, 8200794532637891559375, 1),)),
    (20, (
        (-41, 319830986772877770815625, 1),
        (-40, 4371023485895996201146875, 1),
        (-39, 112189602804663902496103125, 4),
        (-38, 449049812784382009731155625, 4),
        (-37, 10050342868048285131921466875, 32),
        (-36, 20869934989975805430209638125, 32),
        (-35, 133354076012986815544192259625, 128),
        (-34, 167596547984452106021687810625, 128),
        (-33, 2688956953740410330380094566875, 2048),
        (-32, 2169037958764606958633167187625, 2048),
        (-31, 5649843036757804138730750148875, 8192),
        (-30, 8906199610707994033212554906125, 24576),
        (-29, 30078474609662276603719163575325, 196608),
        (-28, 30345107461522389940118382092425, 589824),
        (-27, 96242905310049219154514890083275, 7077888),
        (-26, 58793965014942681509386125874721, 21233664),
        (-25, 860187044215444383476611117813697, 2038431744),
        (-24, 281909840661194072007021905599321, 6115295232),
        (-23, 3713536923205977445731586846795603, 1100753141760),
        (-22, 485599305483120532176287966079149, 3302259425280),
        (-21, 1649192209456810204167676602348311, 554779583447040),
        (-20, 1373256817654559571275547928273, 132090377011200),
        (-19, -389130733407929277357337363, 21134460321792),
        (-18, -58714320083368696914029111, 105672301608960),
        (-17, 2001362185874070952085894941, 76084057158451200),
        (-16, -36298107666670856662899283, 228252171475353600),
        (-15, -190290637947221210235961379, 2739026057704243200),
        (-14, 99657884464049650367692592467, 28472175869835608064000),
        (-13, 43658105290817006187142497067, 97618888696579227648000),
        (-12, -16487947898797868339428148881, 292856666089737682944000),
        (-11, -25659988276421728043383960495831, 3484994326467878427033600000),
        (-10, 15566494110032696466048468479659, 10454982979403635281100800000),
        (-9, 36634003791557961890226520261819, 118079807767382233763020800000),
        (-8, -24164224922555089159121312095932029, 391434562748872104924413952000000),
        (-7, -2551474081966359274426537311909616747, 89247080306742839922766381056000000),
        (-6, 30940210891338681477860139654156708523, 13119320805091197468646658015232000000),
        (-5, 241768775877789685208467243089880873701623, 51952510388161141975840765740318720000000),
        (-4, 394789273357446160146635671743948984341, 342544024537326210829719334551552000000),
        (-3, -509350716128785517489489872313318326681391, 374058074794760222226053513330294784000000),
        (-2, -2603072187220373277150999431416562396331667, 1870290373973801111130267566651473920000000),
        (-1, -73239727426811935976967471475430268695630993, 628417565655197173339769902394895237120000000),
    ), ((41, -319830986772877770815625, 1),)),
    (21, (
        (-43, -13113070457687988603440625, 1),
        (-42, -187954009893527836649315625, 1),
        (-41, -5074758267125251589531521875, 4),
        (-40, -21439287395188408567131935625, 4),
        (-39, -508373829204238680839365584375, 32),
        (-38, -1123180345756915545368641246875, 32),
        (-37, -7672663299011054525996916976875, 128),
        (-36, -10365675291925910148784114648125, 128),
        (-35, -179908101576975486578341289686875, 2048),
        (-34, -158144794153900963578804470710875, 2048),
        (-33, -452781992861361619005698654631125, 8192),
        (-32, -264207130246571868632778803676375, 8192),
        (-31, -3009763670250124589478868921154425, 196608),
        (-30, -3466490299963244982846881929641175, 589824),
        (-29, -4264838183480950645683892805101075, 2359296),
        (-28, -9324318420502496470759745369488021, 21233664),
        (-27, -168254412782683042634343048128646041, 2038431744),
        (-26, -23759954830675662162971453190136993, 2038431744),
        (-25, -1303261860890095872322161129665365589, 1100753141760),
        (-24, -53383446484368219092671565536527577, 660451885056),
        (-23, -5807644664965734924479623908818569, 1761205026816),
        (-22, -183853915191936493605864310451267, 2935341711360),
        (-21, -21935141662799199859059819802883, 105672301608960),
        (-20, 38024277435253917893399573483, 105672301608960),
        (-19, 726914431120599105820357064563, 76084057158451200),
        (-18, -101488701756910884849774253463, 228252171475353600),
        (-17, 3274532080403040877605361007, 913008685901414400),
        (-16, 4039408191346253157270654532291, 4067453695690801152000),
        (-15, -5351133823055004298082096900287, 97618888696579227648000),
        (-14, -55733730798381067452793318483, 10846543188508803072000),
        (-13, 2636738830988974607347563225660941, 3484994326467878427033600000),
        (-12, 691114672021590060771186011565833, 10454982979403635281100800000),
        (-11, -1690127203398625970667510337190647, 95588415811690379712921600000),
        (-10, -899661703740691079721937735243913633, 391434562748872104924413952000000),
        (-9, 99097383732007996075556855114155741, 142795328490788543876426209689600),
        (-8, 32531007533271354726903280747067405087, 174924277401215966248622106869760000),
        (-7, -388796658033431099591258626726433552602919, 10390502077632228395168153148063744000000),
        (-6, -869009623135479457918777113784440051404993, 31171506232896685185504459444191232000000),
        (-5, -4364164391977072778934111049724759634607, 8312401662105782716134522518450995200000),
        (-4, 1167855010579320846967667904321172699353109, 170026397633981919193660687877406720000000),
        (-3, 1822504237238902778222439089387360199030511217, 628417565655197173339769902394895237120000000),
        (-2, 73239727426811935976967471475430268695630993, 628417565655197173339769902394895237120000000),
        (-1, -34856851734234401648335623107688675640839679447003, 2601648721812516297626647395914866281676800000000),
    ), ((43, 13113070457687988603440625, 1),)),
    (22, (
        (-45, 563862029680583509947946875, 1),
        (-44, 8457930445208752649219203125, 1),
        (-43, 239641362614247991727877421875, 4),
        (-42, 1065636584759671657856069821875, 4),
        (-41, 26687151305425599294217477190625, 32),
        (-40, 62507432477728099276743625171875, 32),
        (-39, 454611954618460180357919397669375, 128),
        (-38, 657052852572741782818114055476875, 128),
        (-37, 12267412523343466275941595176360625, 2048),
        (-36, 11673706556426774791921297143210375, 2048),
        (-35, 36449497769355464473905463619506125, 8192),
        (-34, 23396433932315233223436977320471125, 8192),
        (-33, 296213749807121057383819057779243175, 196608),
        (-32, 127967576777386312102313755852198925, 196608),
        (-31, 539659143316536966666458722904872175, 2359296),
        (-30, 1374203681662598019704768892477045163, 21233664),
        (-29, 9868879019814384221509819284219081185, 679477248),
        (-28, 5160627970730009367364520082417004925, 2038431744),
        (-27, 73234262468987738715234646206231504289, 220150628352),
        (-26, 257162106530571300531562154541446243, 8153726976),
        (-25, 394457378032641991688223504915621335, 195689447424),
        (-24, 680013494873727324893143794003919057, 8806025134080),
        (-23, 48690979602310828710961596697754669, 35224100536320),
        (-22, 459877489370078118682388224390883, 105672301608960),
        (-21, -561360969258947800675540642381897, 76084057158451200),
        (-20, -13202441980749917701488138705919, 76084057158451200),
        (-19, 7251519481130732014264455112217, 913008685901414400),
        (-18, -312627218170864351381772488381801, 4067453695690801152000),
        (-17, -163429526459015127546744431877271, 10846543188508803072000),
        (-16, 29096485808807026323427803877721, 32539629565526409216000),
        (-15, 19674896643129186156421507569694397, 316817666042534402457600000),
        (-14, -7408412698188606027720613195971113, 696998865293575685406720000),
        (-13, -16025450938035478677234902436755197, 26764756427273306319618048000),
        (-12, 17025679382899603529187476098238366089, 78286912549774420984882790400000),
        (-11, 99587060069082045589400715089266469341, 5949805353782855994851092070400000),
        (-10, -1352796715911558994548240573610106285221, 174924277401215966248622106869760000),
        (-9, -12737158173576530069085628623921396029121967, 10390502077632228395168153148063744000000),
        (-8, 1486531950834992204325454871551304990343473, 3463500692544076131722717716021248000000),
        (-7, 7061181094883262482823569686518639402105119, 41562008310528913580672612592254976000000),
        (-6, -46475935524515910390276512859191244182603921, 1870290373973801111130267566651473920000000),
        (-5, -7577693729373795912079106521882099261442632369, 209472521885065724446589967464965079040000000),
        (-4, -5613992166570332206621252211112941134482795637, 628417565655197173339769902394895237120000000),
        (-3, 34250426791140398818446332443872113016039854824963, 2601648721812516297626647395914866281676800000000),
        (-2, 34856851734234401648335623107688675640839679447003, 2601648721812516297626647395914866281676800000000),
        (-1, 909773124599542506852275229422593983242880452145053, 811714401205505084859513987525438279883161600000000),
    ), ((45, -563862029680583509947946875, 1),)),
    (23, (
        (-47, -25373791335626257947657609375, 1),
        (-46, -397522730924811374513302546875, 1),
        (-45, -11793174350769404110561308890625, 4),
        (-44, -55061315152318873274253661659375, 4),
        (-43, -1452227096001699248102556024965625, 32),
        (-42, -3594470502631573542132661571690625, 32),
        (-41, -27731055426556442918237836536605625, 128),
        (-40, -42697874627884134781047190617226875, 128),
        (-39, -853382397727935256163252367255283125, 2048),
        (-38, -874147699395072144719005718680916625, 2048),
        (-37, -2956746166052896826623358015305008375, 8192),
        (-36, -2071211175626159186183548455578732625, 8192),
        (-35, -9622181277468075067996867466739820925, 65536),
        (-34, -13870016200511356880940069093985390375, 196608),
        (-33, -65868982925328989813948702657295424625, 2359296),
        (-32, -63930337145063918097028350154923563905, 7077888),
        (-31, -1605433025970711241340362896020316710845, 679477248),
        (-30, -1003090057904291689557560840034736200995, 2038431744),
        (-29, -72358288354527643095562321715215117321, 905969664),
        (-28, -79920477238782592529055262224309106607, 8153726976),
        (-27, -170330588925892541323900372056752989007, 195689447424),
        (-26, -153361624721230565482228964695389353081, 2935341711360),
        (-25, -66401188038730972250093920948424586859, 35224100536320),
        (-24, -3369794897325588899667362713081671587, 105672301608960),
        (-23, -2424223617089199832038281040287188961, 25361352386150400),
        (-22, 12052629194052902168216116264138217, 76084057158451200),
        (-21, 3030807205238496340086128642288437, 913008685901414400),
        (-20, -67575286283692805891393655353637283, 451939299521200128000),
        (-19, 3556881684400949206923946956848011, 2169308637701760614400),
        (-18, 1573872415293771816741824232739457, 6507925913105281843200),
        (-17, -3540406401872535734909028898257485407, 232332955097858561802240000),
        (-16, -32091400673448391692577715591548207, 40999933252563275612160000),
        (-15, 1232674567276663477443133937009378797, 7871987184492148917534720000),
        (-14, 7942345476941251653953087293701097507, 1535037500975969038919270400000),
        (-13, -977816309292020054123669768680901237407, 349988550222520940873593651200000),
        (-12, -5493672960948689293567583977578739215491, 51448316882710578308418266726400000),
        (-11, 6001278907278789629957029793069906520806351, 67911778285177963367112112078848000000),
        (-10, 140744486171388516431300785558041434035391, 18521394077775808191030576021504000000),
        (-9, -1027461684194342721898442007885324892447643, 222256728933309698292366912258048000000),
        (-8, -3467765475474388983507603162385425929710319, 3333850933999645474385503683870720000000),
        (-7, 369627258392212146217440370325064237422048111, 1120173913823880879393529237780561920000000),
        (-6, 103988827048806927049405352691125480106623887, 480074534495948948311512530477383680000000),
        (-5, -2491359840849629517110023100480273455840200847, 662502857604409548669887292058789478400000000),
        (-4, -26350646881877769251644040266920349935798154831, 397501714562645729201932375235273687040000000),
        (-3, -692450683170719912464895463670598245473700242233, 24804106988709093502200580214681078071296000000),
        (-2, -909773124599542506852275229422593983242880452145053, 811714401205505084859513987525438279883161600000000),
        (-1, 1527335577854677023023224272800947125313629267269390501, 9740572814466061018314167850305259358597939200000000),
    ), ((47, 25373791335626257947657609375, 1),)),
    (24, (
        (-49, 1192568192774434123539907640625, 1),
        (-48, 19478613815315757351151824796875, 1),
        (-47, 603837028274788477885706568703125, 4),
        (-46, 2953390712486653609042420013090625, 4),
        (-45, 81827348061689311060947197977621875, 32),
        (-44, 213413526238599156437981695084528125, 32),
        (-43, 1740844316930918514726038442044855625, 128),
        (-42, 2844888257604179550889638922689905625, 128),
        (-41, 60608553273235321250237044317981241875, 2048),
        (-40, 66499526088402216489689059632830873625, 2048),
        (-39, 242270058452008148582353115805784636875, 8192),
        (-38, 183963210466498913287671990967119684375, 8192),
        (-37, 933285163291716473000752316542568728375, 65536),
        (-36, 1481909584951534016091633433203184469875, 196608),
        (-35, 2610881015448163423761285126012262761875, 786432),
        (-34, 8566800098249615370685828768029801082835, 7077888),
        (-33, 246162419514728404875622341452555006352355, 679477248),
        (-32, 19933108128044988459042286058992393348715, 226492416),
        (-31, 46418773403015572531616355590613163246727, 2717908992),
        (-30, 21123286623217627438755313309951800605777, 8153726976),
        (-29, 19435162201820333598423482086756016781031, 65229815808),
        (-28, 72971290757738473938717603765065083727941, 2935341711360),
        (-27, 49508856613992210736707785008672092832747, 35224100536320),
        (-26, 1686988060146879017449686925415268044171, 35224100536320),
        (-25, 19465775751788443658220889691277033687223, 25361352386150400),
        (-24, 33401254347377124912588127444400999507, 15216811431690240),
        (-23, -24041044878073885892969358483115159, 6763027302973440),
        (-22, -6030747034556062667473486825903111391, 90387859904240025600),
        (-21, 583604248293717393694748720160824269, 197209876154705510400),
        (-20, -7002180590489151439273267052413541, 197209876154705510400),
        (-19, -5086542808748367176175629736299453563, 1242422219774644715520000),
        (-18, 1012243783308434679255302740385202503, 3727266659323934146560000),
        (-17, 2427111041202530518725810098245315453, 238545066196731785379840000),
        (-16, -337887813269219835879682726169477122393, 139548863725088094447206400000),
        (-15, -1149123158327292234164595240785653377823, 31817140929320085533963059200000),
        (-14, 19540717601903379747001453895759061972431, 519679968512228063721396633600000),
        (-13, 272801450926760421825755876377639707071527, 881971146560752771001456001024000000),
        (-12, -2773040226221464864883442462112876271824709, 2645913439682258313004368003072000000),
        (-11, -363913484896073213079529342666526097724673, 10583653758729033252017472012288000000),
        (-10, 3396927574898599578047969313542903426900293, 68037774163258070905826605793280000000),
        (-9, 192398936837990644689895848806187863917342877, 32004968966396596554100835365158912000000),
        (-8, -115520982497965200063250215141463039527059177, 32004968966396596554100835365158912000000),
        (-7, -6788565510078985667068209638240940864029158241, 5300022860835276389359098336470315827200000),
        (-6, 1736564108462461008583172774909572617087895721, 6115410993271472756952805772850364416000000),
        (-5, 4808040839571583857002799356463952266886844540287, 13780059438171718612333655674822821150720000000),
        (-4, 69800892069484512419945662604706170715866282185514881, 811714401205505084859513987525438279883161600000000),
        (-3, -1505501022864288002858769667294804869715800136417909229, 9740572814466061018314167850305259358597939200000000),
        (-2, -1527335577854677023023224272800947125313629267269390501, 9740572814466061018314167850305259358597939200000000),
        (-1, -183856455668177802003316143799518064719008299958634826921, 14026424852831127866372401704439573476381032448000000000),
    ), ((49, -1192568192774434123539907640625, 1),)),
    (25, (
        (-51, -58435841445947272053455474390625, 1),
        (-50, -993409304581103624908743064640625, 1),
        (-49, -32120234181455683872049359090046875, 4),
        (-48, -164236313103301124476579529331215625, 4),
        (-47, -4769078444971107525870234473810334375, 32),
        (-46, -13072425817274381881013818492712221875, 32),
        (-45, -112417086246022947666304431342805741875, 128),
        (-44, -194341612447405037270584487760904828125, 128),
        (-43, -4396715593312656829457556173084847496875, 2048),
        (-42, -5144931727738736830847281202350465861875, 2048),
        (-41, -20088456453772672433062021057678540618125, 8192),
        (-40, -16439134277355276499643307173176148844375, 8192),
        (-39, -90456367023609179140480120966079426999875, 65536),
        (-38, -52314466061211917694127436910513256588375, 65536),
        (-37, -304775815773706618148840193791687760327625, 786432),
        (-36, -1113698723206658401088122992806876006807015, 7077888),
        (-35, -1336496124617510441882003050621614294222265, 25165824),
        (-34, -123912817583683410530414774439476357667955, 8388608),
        (-33, -9093295496662758316752344869962087106555097, 2717908992),
        (-32, -1650214841725659022867660156408526066706307, 2717908992),
        (-31, -5633208493425020259655556174904356632036379, 65229815808),
        (-30, -27406082814592212616226737028638424243627803, 2935341711360),
        (-29, -1723672854878527795553348337353067642604823, 2348273369088),
        (-28, -276120163628321708868960411058988695126523, 7044820107264),
        (-27, -6413412175948857259622732297211148725812339, 5072270477230080),
        (-26, -32532029597907078430135051158646792144057, 1690756825743360),
        (-25, -1067181307019480899076205192485497038253, 20289081908920320),
        (-24, 683888493186886866613975696462459341037, 8217078173112729600),
        (-23, 92406722814840980923712548173324012373, 65736625384901836800),
        (-22, -12115645602358282238804257782329038829, 197209876154705510400),
        (-21, 978919067767852057695768613593795783697, 1242422219774644715520000),
        (-20, 12938692952338338324543592649625486097, 177488888539234959360000),
        (-19, -172480818010251395617206789799131949451, 34077866599533112197120000),
        (-18, -2675916327493092662093322544048289745971, 19935551960726870635315200000),
        (-17, 19838914129857513409548436725048211796143, 505033983005080722761318400000),
        (-16, 1137875337648468701757925635979744278943, 74239995501746866245913804800000),
        (-15, -467833869083272188272489370956144628656890411, 881971146560752771001456001024000000),
        (-14, 1509148408567594795159788691108437779073797, 176394229312150554200291200204800000),
        (-13, 27421795838497423771656012190149969624511487, 2116730751745806650403494402457600000),
        (-12, -461182041754765839911926618624582572074459, 3810115353142451970726289924423680000),
        (-11, -1180715849590995214489780686010767233026337611, 2133664597759773103606722357677260800000),
        (-10, -807422571558194201703060918123986459039612477, 32004968966396596554100835365158912000000),
        (-9, 1002810780919285983566356762435484104068260526883, 26500114304176381946795491682351579136000000),
        (-8, 7127745408620018967563883155214223785064268507, 981485714969495627659092284531539968000000),
        (-7, -452557628040670401152938025705687458261548312851, 131238661315921129641272911188788772864000000),
        (-6, -1695291796552758785163532130881370224268313016970088199, 811714401205505084859513987525438279883161600000000),
        (-5, 388686749752535804139639065619506138261939621449671133, 3246857604822020339438055950101753119532646400000000),
        (-4, 1081596317757459722088965363926615551396379849113215527, 1391510402066580145473452550043608479799705600000000),
        (-3, 416598447262695238937291095406022344147478235426770860891, 1275129532075557078761127427676324861489184768000000000),
        (-2, 183856455668177802003316143799518064719008299958634826921, 14026424852831127866372401704439573476381032448000000000),
        (-1, -2583312098861137963745902036370496943872138148651712093816393, 1178219687637814740775281743172924172016006725632000000000),
    ), ((51, 58435841445947272053455474390625, 1),)),
)

C_LAMBDA = (
    (0, (
        (0, 1, 1),
    )),
    (1, (
        (0, -1, 12),
        (1, -5, 6),
        (2, -1, 12),
    )),
    (2, (
        (0, 1, 288),
        (1, 77, 72),
        (2, 89, 48),
        (3, 5, 72),
        (4, 1, 288),
    )),
    (3, (
        (0, 139, 51840),
        (1, -9529, 8640),
        (2, -27461, 3456),
        (3, -15097, 2592),
        (4, -389, 3456),
        (5, -169, 8640),
        (6, 139, 51840),
    )),
    (4, (
        (0, -571, 2488320),
        (1, 337777, 311040),
        (2, 13998491, 622080),
        (3, 17796367, 311040),
        (4, 5905283, 248832),
        (5, 139447, 311040),
        (6, 10331, 622080),
        (7, -263, 311040),
        (8, -571, 2488320),
    )),
    (5, (
        (0, -163879, 209018880),
        (1, -112457839, 104509440),
        (2, -3743416553, 69672960),
        (3, -2865927551, 8709120),
        (4, -242410363, 552960),
        (5, -300350393, 2488320),
        (6, -3413297, 1658880),
        (7, 437041, 8709120),
        (8, -2212457, 69672960),
        (9, 843377, 104509440),
        (10, -163879, 209018880),
    )),
    (6, (
        (0, 5246819, 75246796800),
        (1, 970900513, 895795200),
        (2, 1482637080889, 12541132800),
        (3, 1106696967169, 752467968),
        (4, 1047759740599, 238878720),
        (5, 3837767212781, 1045094400),
        (6, 659873646169, 895795200),
        (7, 10327056101, 1045094400),
        (8, 4195979, 47775744),
        (9, 27448877, 3762339840),
        (10, -46368071, 12541132800),
        (11, -47207, 895795200),
        (12, 5246819, 75246796800),
    )),
    (7, (
        (0, 534703531, 902961561600),
        (1, -493486035151, 451480780800),
        (2, -225195094231943, 902961561600),
        (3, -1289638070489443, 225740390400),
        (4, -29121955645650349, 902961561600),
        (5, -26112505605430481, 451480780800),
        (6, -10171985690689597, 300987187200),
        (7, -196681732716071, 37623398400),
        (8, -17521392049597, 300987187200),
        (9, -763143029441, 451480780800),
        (10, 542272323731, 902961561600),
        (11, -46023287683, 225740390400),
        (12, 47997648697, 902961561600),
        (13, -3774405631, 451480780800),
        (14, 534703531, 902961561600),
    )),
    (8, (
        (0, -4483131259, 86684309913600),
        (1, 5878192235281, 5417769369600),
        (2, 206312086015129, 401316249600),
        (3, 22083863066985103, 1083553873920),
        (4, 122324821696044257, 619173642240),
        (5, 6153087535861703, 9555148800),
        (6, 1209163680982554019, 1547934105600),
        (7, 1846120073908364467, 5417769369600),
        (8, 4525369489883443, 107017666560),
        (9, 458664056855807, 1083553873920),
        (10, 1613292120061, 433421549568),
        (11, -15312840899, 28665446400),
        (12, 258542131813, 3095868211200),
        (13, -3378308687, 154793410560),
        (14, 59492119, 26754416640),
        (15, 1274910073, 5417769369600),
        (16, -4483131259, 86684309913600),
    )),
    (9, (
        (0, -432261921612371, 514904800886784000),
        (1, -30579442714308319, 28605822271488000),
        (2, -59824229777374068547, 57211644542976000),
        (3, -738604215524556121343, 10727183351808000),
        (4, -3076789632351334686547, 2860582227148800),
        (5, -5913300673599148326143, 1021636509696000),
        (6, -76097769182102156328151, 6129819058176000),
        (7, -39253828345338665126339, 3575727783936000),
        (8, -9741203713478167094791, 2600529297408000),
        (9, -899549376074358639779, 2340476367667200),
        (10, -8998677303511488391, 2600529297408000),
        (11, 23373626253965101, 3575727783936000),
        (12, -82025858341157911, 6129819058176000),
        (13, 7211717035263457, 1021636509696000),
        (14, -7187780652355987, 2860582227148800),
        (15, 7239027742903057, 10727183351808000),
        (16, -7328036902057027, 57211644542976000),
        (17, 433741354927841, 28605822271488000),
        (18, -432261921612371, 514904800886784000),
    )),
    (10, (
        (0, 6232523202521089, 86504006548979712000),
        (1, 23431841089451155777, 21626001637244928000),
        (2, 91287077626006446356423, 43252003274489856000),
        (3, 1617169006590936155951707, 7208667212414976000),
        (4, 155822058143210896299853519, 28834668849659904000),
        (5, 81230971953759606610138663, 1802166803103744000),
        (6, 560542686610390513722130519, 3604333606207488000),
        (7, 429333170150824279980358379, 1802166803103744000),
        (8, 2331299228612874277391220163, 14417334424829952000),
        (9, 482946307652411601893298023, 10813000818622464000),
        (10, 7624270929804086812432271, 1966000148840448000),
        (11, 335840149923658093184783, 10813000818622464000),
        (12, 1692009962009872845763, 14417334424829952000),
        (13, -6635403558630173821, 1802166803103744000),
        (14, -15799650522825688361, 3604333606207488000),
        (15, 2386054148391343663, 1802166803103744000),
        (16, -8675211741434244401, 28834668849659904000),
        (17, 319760280227181907, 7208667212414976000),
        (18, -65964127584382777, 43252003274489856000),
        (19, -13007615304885863, 21626001637244928000),
        (20, 6232523202521089, 86504006548979712000),
    )),
    (11, (
        (0, 25834629665134204969, 13494625021640835072000),
        (1, -1521024843846193280173, 1349462502164083507200),
        (2, -19083199338657242316385691, 4498208340546945024000),
        (3, -2405802680627836993125328579, 3373656255410208768000),
        (4, -6294378740179326947773911971, 245356818575287910400),
        (5, -47566761831836479600993108817, 149940278018231500800),
        (6, -676489371886443037707363562531, 408928030958813184000),
        (7, -224933371385859243003054862391, 56227604256836812800),
        (8, -495750914729880043555886216117, 107100198584451072000),
        (9, -337917147919748293508181260177, 134946250216408350720),
        (10, -298304505929397470322549072689, 519024039293878272000),
        (11, -1859908943706902833146174943, 43252003274489856000),
        (12, -161291687192542596986281457, 519024039293878272000),
        (13, -6614559170997732361989017, 3373656255410208768000),
        (14, 15058382896191393550223, 21420039716890214400),
        (15, -8067926974726795325561, 25558001934925824000),
        (16, 628452855981863923111807, 4498208340546945024000),
        (17, -3384874713558777064463, 68154671826468864000),
        (18, 186956405562629464904251, 13494625021640835072000),
        (19, -1978468448691648329063, 674731251082041753600),
        (20, 1988195828051544369061, 4498208340546945024000),
        (21, -284667063126272899601, 6747312510820417536000),
        (22, 25834629665134204969, 13494625021640835072000),
    )),
    (12, (
        (0, -1579029138854919086429, 9716130015581401251840000),
        (1, 440060587823770301709719, 404838750649225052160000),
        (2, 626362997471380302005285863, 73607045572586373120000),
        (3, 246042639529329331527617327257, 110410568358879559680000),
        (4, 189267301678300861643172728327041, 1619355002596900208640000),
        (5, 839480061030874979338180811386109, 404838750649225052160000),
        (6, 37980548911063595822210855560392619, 2429032503895350312960000),
        (7, 1081998003307967684923603903204559, 19278035745201192960000),
        (8, 15582412189216686280685712195756947, 154224285961609543680000),
        (9, 55849259917562785789594596541810801, 607258125973837578240000),
        (10, 1501754111803822399797669351865159, 36803522786293186560000),
        (11, 1608152039598328840258046136166157, 202419375324612526080000),
        (12, 97114377616185319016921193372073, 186848654145796177920000),
        (13, 697182808461693844670750451077, 202419375324612526080000),
        (14, 347635109878813724379447559, 36803522786293186560000),
        (15, -837700539972519077485566599, 607258125973837578240000),
        (16, 184018234131236078840342789, 1079570001731266805760000),
        (17, -213261710761783506432463, 2754005106457313280000),
        (18, 64950103231160248835745259, 2429032503895350312960000),
        (19, -2692459914397567082253691, 404838750649225052160000),
        (20, 1881826540556642799699841, 1619355002596900208640000),
        (21, -12263886361285895416463, 110410568358879559680000),
        (22, -2099286201334793642707, 809677501298450104320000),
        (23, 114855749842984705337, 57834107235603578880000),
        (24, -1579029138854919086429, 9716130015581401251840000),
    )),
    (13, (
        (0, -746590869962651602203151, 116593560186976815022080000),
        (1, -4109706843560016519584171, 4484367699499108270080000),
        (2, -1987602316805108558848879215787, 116593560186976815022080000),
        (3, -100285099702066343318497817389799, 14574195023372101877760000),
        (4, -30112528323214766562462402221064941, 58296780093488407511040000),
        (5, -373755849727825861727058785175802543, 29148390046744203755520000),
        (6, -7886901704905885734642963125104258421, 58296780093488407511040000),
        (7, -10055715947978580629668721398489193819, 14574195023372101877760000),
        (8, -212033060718881364048011934510326854957, 116593560186976815022080000),
        (9, -148386340130300421590994586150130944961, 58296780093488407511040000),
        (10, -219144500694390826232289973872085294777, 116593560186976815022080000),
        (11, -392079812247750654325095793468673059, 560545962437388533760000),
        (12, -69874172026844715688469227221354007, 594865102994779668480000),
        (13, -99125571387406792227488178239953769, 14574195023372101877760000),
        (14, -13300978667926954123754125679653, 320311978535650590720000),
        (15, -245845639879087838821166225047, 7287097511686050938880000),
        (16, -2675291326492604523692378746297, 116593560186976815022080000),
        (17, 164812985110144737572325934057, 8328111441926915358720000),
        (18, -1150267958268137054599413603757, 116593560186976815022080000),
        (19, 60502172528418233424314314741, 14574195023372101877760000),
        (20, -84972437738911924044332423861, 58296780093488407511040000),
        (21, 12176313453872676750446703377, 29148390046744203755520000),
        (22, -5551540155632870602218935981, 58296780093488407511040000),
        (23, 22008153660603991838236091, 1324926820306554716160000),
        (24, -18665413133018343719311639, 8968735398998216540160000),
        (25, 1387879354906800049022791, 8328111441926915358720000),
        (26, -746590869962651602203151, 116593560186976815022080000),
    )),
    (14, (
        (0, 1511513601028097903631961, 2798245444487443560529920000),
        (1, 751481393322115451286617411, 699561361121860890132480000),
        (2, 2273146629586102789375416876889, 66624891535415322869760000),
        (3, 4913064488896226826559611503974349, 233187120373953630044160000),
        (4, 2081239736144199290351574581947021313, 932748481495814520176640000),
        (5, 8860293291234748300204385290312157851, 116593560186976815022080000),
        (6, 255066670517292578799670594877968865267, 233187120373953630044160000),
        (7, 894369964618277192609731639494090911611, 116593560186976815022080000),
        (8, 2403766572816997408971806600937856865473, 84795316499619501834240000),
        (9, 174015124040757371041409235869015176031, 3028404160700696494080000),
        (10, 913133727571056170723013929510834499553, 14132552749936583639040000),
        (11, 9245070241750118824345700842545599251487, 233187120373953630044160000),
        (12, 11753485357468855741027101564808657755713, 932748481495814520176640000),
        (13, 107869561412558258343916520045274968033, 58296780093488407511040000),
        (14, 11169848309214088446184675355751944341, 116593560186976815022080000),
        (15, 31498437956473750034831562712046393, 58296780093488407511040000),
        (16, 105054832113601973377433930062199, 133249783070830645739520000),
        (17, -22299447991335392183212760881513, 233187120373953630044160000),
        (18, -2056672930303514931996490993877, 155458080249302420029440000),
        (19, 131106669025052415537720657617, 21198829124904875458560000),
        (20, -201813751314288582497564981567, 84795316499619501834240000),
        (21, 8384843155703716318858914041, 10599414562452437729280000),
        (22, -48473542585918737341649980173, 233187120373953630044160000),
        (23, 683035764436595089460947333, 16656222883853830717440000),
        (24, -460909927384571536434804317, 84795316499619501834240000),
        (25, 71743462860000048098828789, 233187120373953630044160000),
        (26, 3485663918264865813477731, 93274848149581452017664000),
        (27, -6101049987420775712204821, 699561361121860890132480000),
        (28, 1511513601028097903631961, 2798245444487443560529920000),
    )),
    (15, (
        (0, 8849272268392873147705987190261, 299692087104605205332754432000000),
        (1, -19736913568147120768041900741671, 9989736236820173511091814400000),
        (2, -1363686738305389444918601434665657551, 19979472473640347022183628800000),
        (3, -137278030085730110227584052187952065419, 2140657765032894323805388800000),
        (4, -3004211744854585832071968010754853448751, 317134483708576936860057600000),
        (5, -345476319631221322311033236422144740563647, 792836209271442342150144000000),
        (6, -1595846383147571442041479418888324992326803, 190280690225146162116034560000),
        (7, -4376275679855934827309135835841469656687807, 55498534649000963950510080000),
        (8, -175615712281287137715849309666583293665303029, 443988277192007711604080640000),
        (9, -202056807770402394059820450561465780228176921, 181631567942184972928942080000),
        (10, -155281222902697208147866804950685924994797669, 86491222829611891870924800000),
        (11, -79144492112298632823485988602366849231502521, 47570172556286540529008640000),
        (12, -493692370139819755492614537606470384367169951, 570842070675438486348103680000),
        (13, -7556368187073438078664723735097564418909143, 31713448370857693686005760000),
        (14, -808237548356085519833547356722193406136267, 26116957481882806564945920000),
        (15, -2721813421536740044121735930283090702131, 1883434433789625473433600000),
        (16, -197775507989054273125574316158967855307, 26116957481882806564945920000),
        (17, -385630154260859960303070652116563303, 31713448370857693686005760000),
        (18, 2248915195140267061930711815994929569, 570842070675438486348103680000),
        (19, -75399142696385106591524684199521561, 47570172556286540529008640000),
        (20, 75499888269823951592769937719946331, 86491222829611891870924800000),
        (21, -75858810460036664310009850583242601, 181631567942184972928942080000),
        (22, 75952705110224628980210751765444491, 443988277192007711604080640000),
        (23, -3307763852079335461549897463571967, 55498534649000963950510080000),
        (24, 3314180406795794687539378818031597, 190280690225146162116034560000),
        (25, -3320726300421984461445230515973647, 792836209271442342150144000000),
        (26, 19686959896543100529531120652693, 24394960285275148989235200000),
        (27, -256364814994205152805389207985899, 2140657765032894323805388800000),
        (28, 256675205959557258659260666249969, 19979472473640347022183628800000),
        (29, -8854668371948543457221953291031, 9989736236820173511091814400000),
        (30, 8849272268392873147705987190261, 299692087104605205332754432000000),
    )),
    (16, (
        (0, -142801712490607530608130701097701, 57540880724084199423888850944000000),
        (1, 409896302567202972676471843441987, 359630504525526246399305318400000),
        (2, 28890350447258175308326030409171337437, 211547355603250733176061952000000),
        (3, 69899976067456476053783321103675048241529, 359630504525526246399305318400000),
        (4, 57091441184355963562099839096395066750228849, 1438522018102104985597221273600000),
        (5, 625373748790927073820343953415792624924125709, 256878931803947318856646656000000),
        (6, 703851031977379234302372200512906088047311877, 11416841413508769726962073600000),
        (7, 152173114691662231615656788019240789900840146737, 199794724736403470221836288000000),
        (8, 323304570543030745140223662115031683866804745757, 63934311915649110470987612160000),
        (9, 458158202286265592800029268083135021147109375753, 23975366968368416426620354560000),
        (10, 10172125196476866890236865922702983958096286044019, 239753669683684164266203545600000),
        (11, 1342700119039441657067606124757453946836318792507, 23975366968368416426620354560000),
        (12, 2990278385797155830106573611066486470770234207739, 68501048481052618361772441600000),
        (13, 3934710066679015893986565960094054280506057339, 201473672003095936358154240000),
        (14, 17417619574325692598195621241100040070077825761, 3688517995133602527172362240000),
        (15, 21888448592113145696709414288099592903996582073, 39958944947280694044367257600000),
        (16, 174828683604497727894326420767307015256518849, 7521683754782248290704424960000),
        (17, 4547264207762237386127919631268274411353873, 39958944947280694044367257600000),
        (18, 4706557821167602295758861246593732381613, 47950733936736832853240709120000),
        (19, -4077449823712806653117966773885991021, 201473672003095936358154240000),
        (20, 68593712480335453837074588898019564539, 68501048481052618361772441600000),
        (21, -12256588093288000762327560161759237213, 23975366968368416426620354560000),
        (22, 60632918243827581772230156139558653619, 239753669683684164266203545600000),
        (23, -2378149435431162328205420656226126927, 23975366968368416426620354560000),
        (24, 2089877246484137043109080731943618077, 63934311915649110470987612160000),
        (25, -1769726683412858636092258558169430263, 199794724736403470221836288000000),
        (26, 21684076429511776222191340420788037, 11416841413508769726962073600000),
        (27, -77517698442713377773642968203140491, 256878931803947318856646656000000),
        (28, 43272667960899847267107187619325809, 1438522018102104985597221273600000),
        (29, -189334254292979149408305007633231, 359630504525526246399305318400000),
        (30, -72778228001606852519200044292963, 211547355603250733176061952000000),
        (31, 1380093521234619872644535045479, 27663884963502018953792716800000),
        (32, -142801712490607530608130701097701, 57540880724084199423888850944000000),
    )),
    (17, (
        (0, -2355444393109967510921431436000087153, 13119320805091197468646658015232000000),
        (1, 33103266166433330994193275685149189883, 6559660402545598734323329007616000000),
        (2, -398347538614069504630900525879677312424793, 1457702311676799718738517557248000000),
        (3, -4378057311941272967203418674942042337823121, 7454159548347271289003782963200000),
        (4, -269899302181202386625814485418082285472989944581, 1639915100636399683580832251904000000),
        (5, -1213854056946340748364306094927205182632534834643, 91106394479799982421157347328000000),
        (6, -718393782139241138849586547814557349213415238361137, 1639915100636399683580832251904000000),
        (7, -2868247464109363055870949149396138458923417392760869, 409978775159099920895208062976000000),
        (8, -487985471313056313784706542488011640301879721778479, 8098346175982220659658430873600000),
        (9, -163120415057566770713923166001621378926912683839894593, 546638366878799894526944083968000000),
        (10, -14850111470264199207184328538401058228117007950496129, 16819642057809227523905971814400000),
        (11, -371869844072760780821305620072466830791766801017461, 233606139691794826720916275200000),
        (12, -14766883661352876479733333434012875968391649005134613, 8409821028904613761952985907200000),
        (13, -12797887427773747233321001859659245780838165814282951, 10932767337575997890538881679360000),
        (14, -504345826843827170703722018638378914444193299228199, 1104319933088484635407967846400000),
        (15, -2676802133316836200793592837369080595654761035257523, 27331918343939994726347204198400000),
        (16, -235499056459864238295796696661079799702096711482551, 23016352289633679769555540377600000),
        (17, -169242690535753403689958829250037130486431097377, 426228746104327403139917414400000),
        (18, -8391471831449324488331605035761598664760026507, 4603270457926735953911108075520000),
        (19, -20623720417415684700299283711007813580820163, 27331918343939994726347204198400000),
        (20, 162670567279679349078640041988514543300371, 12147519263973330989487646310400000),
        (21, 8982813199590236746155727664323478300933501, 54663836687879989452694408396800000),
        (22, -972824334242486300543518871692817928058259, 9938879397796361718671710617600000),
        (23, 8641823828782166240933934686100552869, 169895374321305328524302745600),
        (24, -392492353711211042330154524741060297399809, 16819642057809227523905971814400000),
        (25, 35720167506252676722849066867548266357649, 3822645922229369891796811776000000),
        (26, -131123851858078653843896289929117781769579, 40491730879911103298292154368000000),
        (27, 393870489628102997849584188544518892729771, 409978775159099920895208062976000000),
        (28, -78878569779811639613211808835007687601661, 327983020127279936716166450380800000),
        (29, 4539191679753414688786915082874127372877, 91106394479799982421157347328000000),
        (30, -13634132385356124031504465388852503617221, 1639915100636399683580832251904000000),
        (31, 440257191563639657720963955298941622313, 409978775159099920895208062976000000),
        (32, -146852379371486768148934666955641776473, 1457702311676799718738517557248000000),
        (33, 616289755047590414525440943260409531, 100917852346855365143435830886400000),
        (34, -2355444393109967510921431436000087153, 13119320805091197468646658015232000000),
    )),
    (18, (
        (0, 2346608607351903737647919577082115121863, 155857531164483425927522297220956160000000),
        (1, 3010618463222222557327051556520426172507, 4329375865680095164653397145026560000000),
        (2, 946193043090170700750179306084602969998771401, 1731750346272038065861358858010624000000),
        (3, 657203026043599872463703139393408481845222356243, 371089359915436728398862612430848000000),
        (4, 6091439910337561058508902472449579562949049518091, 8996105694919678264214851210444800000),
        (5, 504058900643484545124393911851738298417850428927819, 7028207574155998643917852508160000000),
        (6, 127693128436317341407297885279261350888889538005982881, 42169245444935991863507115048960000000),
        (7, 7881377818978756997533416404526542678508390893369377, 127785592257381793525779136512000000),
        (8, 53365448616391057967607162515843898659943005034384391013, 78715924830547184811879948091392000000),
        (9, 1068265274494070326703647838210792478809032896828328213, 247707455760463168988433403084800000),
        (10, 155441434617166162320436029276636755033258100772524598109, 9370943432207998191890470010880000000),
        (11, 22418910415967978839555359642979306006208808403463904703, 566375701946637253356017418240000000),
        (12, 112803009765281311005070496603395774844162475359531922149, 1903022358540701171276218525286400000),
        (13, 57316508043312196168218383418418444439365206056574592417, 1030803777542879801107951701196800000),
        (14, 92784345723221268447038181017870015838710988986309060351, 2886250577120063443102264763351040000),
        (15, 15546125597119223335671023985471890190795451514943999689, 1405641514831199728783570501632000000),
        (16, 111380207504796335838236250765587063904619212219368932549, 52477283220364789874586632060928000000),
        (17, 75400363143195403161735717326164500038159886235796359, 374837737288319927675618800435200000),
        (18, 231792027630243116354427225243139379431861285184737, 32282675938706979417038939750400000),
        (19, 2324304001914345742675186150508202915006727128611, 74967547457663985535123760087040000),
        (20, 8120518604217885201937891868996055546652466777, 681523158706036232137488728064000000),
        (21, -36756335331860859322691009643923756882999082697, 9839490603818398101484993511424000000),
        (22, -99978692898605561408655388258741746306634841, 1110096375815409016577794139750400000),
        (23, 488854835016701895142200805533332486477945839, 7215626442800158607755661908377600000),
        (24, -2397258733942923320347920684910685150874451, 76120894341628046851048741011456000),
        (25, 55640468864357939905412414759201756577316321, 3964629913626460773492121927680000000),
        (26, -50800224055367487425525151197288540140839331, 9370943432207998191890470010880000000),
        (27, 6462727057139120541713454895725723969166783, 3614506752423085016872038432768000000),
        (28, -39057863802272841673704803336583393142334107, 78715924830547184811879948091392000000),
        (29, 20201610485423568068243785430319505368659, 178899829160334510936090791116800000),
        (30, -5960932220962138891710340791413593911182873, 295184718114551943044549805342720000000),
        (31, 1663852998854578353553006038221311793209, 638927961286908967628895682560000000),
        (32, -8311431713272563184751774715454429323209, 44980528474598391321074256052224000000),
        (33, -360458120151684329838729513309547475491, 53012765702205246914123230347264000000),
        (34, 167040865557358780743933947189884054051, 49478581322058230453181681657446400000),
        (35, -120716304432739573772603631015545104721, 333028912744622704973338241925120000000),
        (36, 2346608607351903737647919577082115121863, 155857531164483425927522297220956160000000),
    )),
    (19, (
        (0, 2603072187220373277150999431416562396331667, 1870290373973801111130267566651473920000000),
        (1, -7232801750867887852572781497033618162945253, 133592169569557222223590540475105280000000),
        (2, -2041993834465492823211761698848263577500559893123, 1870290373973801111130267566651473920000000),
        (3, -831058150860417492934042857602461472323840919941231, 155857531164483425927522297220956160000000),
        (4, -9863351519683378191865771453627622499016902089501479, 3562457855188192592629081079336140800000),
        (5, -16963622712848546697918909381569302320344566025773223087, 44530723189852407407863513491701760000000),
        (6, -165684111240849675863202139972979962652017048796327646211, 8096495125427710437793366089400320000000),
        (7, -71608286865577961394035737479691926440852123089003570763, 136239100668254742943638371696640000000),
        (8, -14723265883384238851850839891248589459393942752008866627099, 2024123781356927609448341522350080000000),
        (9, -49710636305419401364075555949035703029817685184633663572781, 850131988169909595968303439387033600000),
        (10, -937201881930446073367527021444060439023081551506227842362589, 3269738416038113830647320920719360000000),
        (11, -14749899886946698777868225715716394476018014381355781159645181, 16699021196194652777948817559388160000000),
        (12, -12917393311349152342766354350589870533056001160978354927171129, 7421787198308734567977252248616960000000),
        (13, -8181559302512441966992621195648200426605380861366377347212333, 3710893599154367283988626124308480000000),
        (14, -148338725201188816421056359429048582888731374187271807620369, 83124016621057827161345225184509952000),
        (15, -23995658755905710993511422616821801329903106900957710768477, 26506382851102623457061615173632000000),
        (16, -5762051252318975414426668822312037304301629827699807568819727, 20781004155264456790336306296127488000000),
        (17, -45331870031705583719756488670555601653691214995534737150059, 944591097966566217742559377096704000000),
        (18, -3361935842901360667579597864143264926988843293698435753103, 809649512542771043779336608940032000000),
        (19, -1109305240171117487667957157928443404412228150459319861, 8096495125427710437793366089400320000),
        (20, -34769215647421813453900255474252760197988149588305611, 62280731734059311059948969918464000000),
        (21, -9121939119117926263789784534779126480257119771147, 55564182233327424573091728064512000000),
        (22, 275213232763189877772628415194546901234835642010439, 2968714879323493827190900899446784000000),
        (23, -2172039059954827730295385573933509460603267049761, 99908673823386811492001472577536000000),
        (24, 5513379210101240713790361435002325693375816001067, 415620083105289135806726125922549760000),
        (25, -27749999071603790390189358961471718531047735923133, 3710893599154367283988626124308480000000),
        (26, 27763445543993332789704432618472401500332547001991, 7421787198308734567977252248616960000000),
        (27, -27777649403988362658531395540092120985578349278141, 16699021196194652777948817559388160000000),
        (28, 27797813021584947041074117520880339907043295350023, 42506599408495479798415171969351680000000),
        (29, -27409325224987507610871473824056207887639964091, 121447426881415656566900491341004800000),
        (30, 960172788988212219368203048641624589785873316547, 14168866469498493266138390656450560000000),
        (31, -31001934772087842828857276806496400019304107439, 1771108308687311658267298832056320000000),
        (32, 4432954783561459956828346038874615990457167067, 1156642160775387205399052298485760000000),
        (33, -2389090940261490550603380256762222855183789019, 3425440245373262108297193345515520000000),
        (34, 365679924626996841220030020247625443121327513, 3562457855188192592629081079336140800000),
        (35, -107621232395813598829222795800632537653918463, 9168090068499025054560135130644480000000),
        (36, 2873315381835062672394195577727018043178561, 2936091638891367521397594296156160000000),
        (37, -49472451208831203688294876714377178221032851, 935145186986900555565133783325736960000000),
        (38, 2603072187220373277150999431416562396331667, 1870290373973801111130267566651473920000000),
    )),
    (20, (
        (0, -73239727426811935976967471475430268695630993, 628417565655197173339769902394895237120000000),
        (1, 355253823977406309224295808972589618098693183, 78552195706899646667471237799361904640000000),
        (2, 114454633962665783381472076403036670148721370489031, 52368130471266431111647491866241269760000000),
        (3, 1259733272970773997276284809929759219909465180129330769, 78552195706899646667471237799361904640000000),
        (4, 3540105289154452141289253848805652852398752007734918347121, 314208782827598586669884951197447618560000000),
        (5, 17470132652073763312866655378979990625042331285041882094537, 8728021745211071851941248644373544960000000),
        (6, 1015448925651714812379337302983257239187520893538010262641593, 7481161495895204444521070266605895680000000),
        (7, 114019918804786969720031332900120970646144508530870895553335109, 26184065235633215555823745933120634880000000),
        (8, 476141240134799158669042030858520463946350877205032989158502689, 6347652178335324983229999014089850880000000),
        (9, 1342094561955975438187194730657339668248657619079179469433529053, 1785277175156810151533437222712770560000000),
        (10, 16497784725162962951989976558480553698373682920253953509912948651, 3570554350313620303066874445425541120000000),
        (11, 118013635173633766963024365923503778336968726507044185126561858779, 6546016308908303888955936483280158720000000),
        (12, 3583351103597305582727392786864428718647928892109276610555082093699, 78552195706899646667471237799361904640000000),
        (13, 212243280960725662881358131456314371471488185842253457734669408083, 2805435560960701666695401349977210880000000),
        (14, 119729440085494134131266365442799722537260273527128100010220446151, 1454670290868511975323541440728924160000000),
        (15, 126977127845082762201757358915310154250840803419978693034633503491, 2182005436302767962985312161093386240000000),
        (16, 182681565423192608680815751418950193952874653186988441391126960099, 6982417396168857481552998915498835968000000),
        (17, 2092738174735729193522978921565111450463405743965072046422057383, 290934058173702395064708288145784832000000),
        (18, 5920447542531815153911775031568396009307423234431302617316543389, 5236813047126643111164749186624126976000000),
        (19, 21376249804874665705077835994110140305446208496436765125650227, 238036956687574686871124963028369408000000),
        (20, 6565706628977677750351810890185892072640441528960011147401, 2386335405389219918507518426349568000000),
        (21, 2525695190094104404591636806999334321811529594373379966011, 238036956687574686871124963028369408000000),
        (22, 4725366693119629404236764405089823914311787952776891101, 5236813047126643111164749186624126976000000),
        (23, -310022083982993208203328887294790670094757640120202273, 290934058173702395064708288145784832000000),
        (24, 154649502385055787110561541531690485958188895294195683, 6982417396168857481552998915498835968000000),
        (25, -16024135791678594729745938326316177667955765163023509, 2182005436302767962985312161093386240000000),
        (26, 528850533194902646260491916605118881006502743534691, 111897714682193228871041649286840320000000),
        (27, -6495734225454180945870153276360632382439964084079413, 2805435560960701666695401349977210880000000),
        (28, 78475263311351631928133838714274195848938251206174851, 78552195706899646667471237799361904640000000),
        (29, -2482273714694100805601966769009259963880620167650717, 6546016308908303888955936483280158720000000),
        (30, 446694274456877592087720741145887762288808312729451, 3570554350313620303066874445425541120000000),
        (31, -63193766093372830001462085156016412837169001883131, 1785277175156810151533437222712770560000000),
        (32, 53495967654314363764681036278673855396564927025441, 6347652178335324983229999014089850880000000),
        (33, -42925926007949885102008820513334293701167698991139, 26184065235633215555823745933120634880000000),
        (34, 1850411718050826297529022829861925527418728651641, 7481161495895204444521070266605895680000000),
        (35, -224301744298567909062158470142378297998327202063, 8728021745211071851941248644373544960000000),
        (36, 337224281420524811671225599590082929136828207473, 314208782827598586669884951197447618560000000),
        (37, 13593402552314321783072378640914729568476714281, 78552195706899646667471237799361904640000000),
        (38, -1989336554556158192302522848919945894157228921, 52368130471266431111647491866241269760000000),
        (39, 256869605270804002244495381257655722832224951, 78552195706899646667471237799361904640000000),
        (40, -73239727426811935976967471475430268695630993, 628417565655197173339769902394895237120000000),
    )),
    (21, (
        (0, -34856851734234401648335623107688675640839679447003, 2601648721812516297626647395914866281676800000000),
        (1, 244108912920190038380219658656331957095372370550831, 433608120302086049604441232652477713612800000000),
        (2, -345536206670898585590325540302702132800902287409782671, 78837840054924736291716587754995947929600000000),
        (3, -12691139270051977688973482348091094274631037863145765279, 263324769414222297330632327521747599360000000),
        (4, -6547313552967105611810947932839378219220351926857817448613, 143341527372590429621302886827265359872000000),
        (5, -2260169360948707204037010750380459166471055156856190185224898863, 216804060151043024802220616326238856806400000000),
        (6, -1153132503782089474504263561335574980898578797297979372017821785999, 1300824360906258148813323697957433140838400000000),
        (7, -115735823320236699003660340983750773007598047307896954445060533863, 3284910002288530678821524489791497830400000000),
        (8, -43253258665786399080499032032395724560834065734614692502368901273823, 57814416040278139947258831020330361815040000000),
        (9, -480845185514074048780426490416978474477687281504375441825220481964079, 52032974436250325952532947918297325633536000000),
        (10, -5539251534708764469481543383530530424043948756315042718293532034190703, 78837840054924736291716587754995947929600000000),
        (11, -9256104713789321061998783266969727209708403146587545220552200340214907, 27100507518880378100277577040779857100800000000),
        (12, -353908404689546089024191494814392104374719689244431305960228449036098753, 325206090226564537203330924489358285209600000000),
        (13, -2272906873255625652632903444125231466561748851807681247983058761528683, 985473000686559203646457346937449349120000000),
        (14, -14181663231579976079588794575891102490174544122512816942270123099308731, 4336081203020860496044412326524777136128000000),
        (15, -22876621247702044314050222712714359853694118724789627868669468614142031, 7391047505149194027348430102030870118400000000),
        (16, -93063074376133057691261545064810306885281539758567193767018288279843969, 48178680033565116622715692516941968179200000000),
        (17, -18702023272426183124141534305953600543325413171290640093028322833178129, 24089340016782558311357846258470984089600000000),
        (18, -304291790670804912547541421592772952801183678073593324472904131729847, 1576756801098494725834331755099918958592000000),
        (19, -4004913617882897593727753779642735413570375758005541631268191201439, 144536040100695349868147077550825904537600000),
        (20, -1276112856666503763735388575603009204377740113883478615738657174719, 628417565655197173339769902394895237120000000),
        (21, -4970358663632104224914382103421683885622971815751109540372410733, 85693304407526887273604986690212986880000000),
        (22, -7845500405210879841118181007576079915789971259283548409311247, 36965739156188069019986464846758543360000000),
        (23, 9648153779165614616632450917849703907493890193696148197973, 722680200503476749340735387754129522688000000),
        (24, 175468804320862069872149810448817075845390187519551563069, 12614054408787957806674654040799351668736000),
        (25, 77544255545389154157280007349545209327256401976055359347471, 24089340016782558311357846258470984089600000000),
        (26, -9794619131547237952595393441774512705120589341030996911139, 4379880003051374238428699319721997107200000000),
        (27, 106800516338119074244455396516394041415672293937148971699019, 81301522556641134300832731122339571302400000000),
        (28, -15258180088210001246209623333949275644271327370489485225959, 21680406015104302480222061632623885680640000000),
        (29, 66994273817520211579822988200547279237442986108604533521, 197094600137311840729291469387489869824000000),
        (30, -47922107740880127773607218516486361645401304538731597376513, 325206090226564537203330924489358285209600000000),
        (31, 1546681688541756307703019670850960884079113841720778596533, 27100507518880378100277577040779857100800000000),
        (32, -1547593541345638890530324621750212138979608392209797295983, 78837840054924736291716587754995947929600000000),
        (33, 1548580095522318746831329963060729464957227442439620735541, 260164872181251629762664739591486628167680000000),
        (34, -18230749647699627276698885900167843441974361779896907283, 11562883208055627989451766204066072363008000000),
        (35, 1184615126411587283284850922115803453385901585907229417, 3284910002288530678821524489791497830400000000),
        (36, -91275472730842636093539702372817659108185438102656998479, 1300824360906258148813323697957433140838400000000),
        (37, 224401434595327213573464627895958775383129921540039827, 19709460013731184072929146938748986982400000000),
        (38, -129985757315394462672209044281027893906519711085492401, 86721624060417209920888246530495542722560000000),
        (39, 2000606776486828943131272757438030681744183925626363, 13008243609062581488133236979574331408384000000),
        (40, -82690456988890021541950030458672522284703509895821, 7167076368629521481065144341363267993600000000),
        (41, 244048497551565311774173469309138776371277741514191, 433608120302086049604441232652477713612800000000),
        (42, -34856851734234401648335623107688675640839679447003, 2601648721812516297626647395914866281676800000000),
    )),
    (22, (
        (0, 909773124599542506852275229422593983242880452145053, 811714401205505084859513987525438279883161600000000),
        (1, -7340594900621722408800147871624071636929669526136429, 202928600301376271214878496881359569970790400000000),
        (2, 208733805705105230003231158465825901433813562058464277789, 23873952976632502495868058456630537643622400000000),
        (3, 4196765929570651331562574648269397632011331565912326373708073, 28989800043053753030696928125908509995827200000000),
        (4, 149869356805202771045561522573911805931238857467862803259903245003, 811714401205505084859513987525438279883161600000000),
        (5, 5469542424536715108594587461318725035899452429569906706326148019567, 101464300150688135607439248440679784985395200000000),
        (6, 89209363643989607685989750324050038118831826870432255396317634970899, 15609892330875097785759884375489197690060800000000),
        (7, 167762586869343493830378729402259089624991966222143847114357131112111, 600380474264426837913841706749584526540800000000),
        (8, 19691512606111522675398379630315486332409438598955408952075505619908437, 2714763883630451788827805978345947424358400000000),
        (9, 1707025295279668999827033009505713201709650074021245265561513678684621863, 15609892330875097785759884375489197690060800000000),
        (10, 4534953980276272102371921824938734184845538595475081296896379837864932427, 4459969237392885081645681250139770768588800000000),
        (11, 94840148994356071112443123455524502400404829568660394246915755937997682731, 15609892330875097785759884375489197690060800000000),
        (12, 1497839052742974728350492786471329381097853824571464858263401134281602425861, 62439569323500391143039537501956790760243200000000),
        (13, 70274374802961670572382951966198223339906352001053591378337450066649932807, 1102872827724871039211296178703041141145600000000),
        (14, 5833233812388794876244470342218913446553508670311003256616743113770390063749, 50732150075344067803719624220339892492697600000000),
        (15, 3583607629069237646707974753469517401021331226024848514847369629255036069281, 25366075037672033901859812110169946246348800000000),
        (16, 47717042143419718012272040954678736464678876655493872659924342027786906415033, 405857200602752542429756993762719139941580800000000),
        (17, 19332047258234414838430389866864545246433208208319255672198236007755242821, 295814286153609724803029878835801122406400000000),
        (18, 1600371435829364384276457295947206006508737184033253886707187349581782922023, 67642866767125423738292832293786523323596800000000),
        (19, 13921716822482545552276729455223580662460348755287405680958964948152209561, 2601648721812516297626647395914866281676800000000),
        (20, 112971373997694360389722294123737833896726910892043923285759031312832473, 160101459803847156777024455133222540410880000000),
        (21, 12468036807550110508931157345689156231961408914595769484340637522636439, 260164872181251629762664739591486628167680000000),
        (22, 28973474989182544835470275226527352523612656559621222867978611233329, 22623032363587098240231716486216228536320000000),
        (23, 1159468795309299806614542611413839728634931235027151504852790736639, 260164872181251629762664739591486628167680000000),
        (24, -178068865060901031499374752887987441561882718041752921337195373, 297331282492859005443045416675984717905920000000),
        (25, -53005643192304407685427190680565909155231133771743766741819567, 153038160106618605742743964465580369510400000000),
        (26, 91626972192528292917667861269874884666163982276194196154050983, 67642866767125423738292832293786523323596800000000),
        (27, 180533017174262435019590106448725507775437481558351859842212443, 101464300150688135607439248440679784985395200000000),
        (28, -49012171485779513925976545740785645320653994123318418367179201, 57979600086107506061393856251817019991654400000000),
        (29, 11201850809243255248223845696490865638131250437946966533251401, 25366075037672033901859812110169946246348800000000),
        (30, -1515517047397893646455233238417098762664193091243517507470573, 7247450010763438257674232031477127498956800000000),
        (31, 13903861274752401939142855203679062157776679557408129916441, 157553261103553005601613739814720163020800000000),
        (32, -2064464903648894527847639527536629384124834241569964901315579, 62439569323500391143039537501956790760243200000000),
        (33, 13099243872678338513386360656751985946221916098366188327567, 1200760948528853675827683413499169053081600000000),
        (34, -97890961127385428318702870124916701234525921758831201938291, 31219784661750195571519768750978395380121600000000),
        (35, 12075229560407948187678578333231634775573829889917370834223, 15609892330875097785759884375489197690060800000000),
        (36, -62174576828498181413133446788083159748185017082397420349, 387823411947207398403972282620849632051200000000),
        (37, 210418661102836753777926474767098768406614358346399147163, 7804946165437548892879942187744598845030400000000),
        (38, -7678632246026328482212976315716964354404899867765449323, 2229984618696442540822840625069885384294400000000),
        (39, 1666440438250102781422736562471628832197370318555754791, 5968488244158125623967014614157634410905600000000),
        (40, -1241224104250878167658759602089294989088814906752987957, 811714401205505084859513987525438279883161600000000),
        (41, -671168589018224232694404326501402131621968943655740009, 202928600301376271214878496881359569970790400000000),
        (42, 201845993081757141699768451571755367505632101486808173, 405857200602752542429756993762719139941580800000000),
        (43, -7288669935324684246804848921248817115686189976729349, 202928600301376271214878496881359569970790400000000),
        (44, 909773124599542506852275229422593983242880452145053, 811714401205505084859513987525438279883161600000000),
    )),
    (23, (
        (0, 1527335577854677023023224272800947125313629267269390501, 9740572814466061018314167850305259358597939200000000),
        (1, -5028311822383503809796152719635272362628962685806838791, 695755201033290072736726275021804239899852800000000),
        (2, -393311165025305743324196275695711154442878939128307299229, 22705297935818324052014377273438833003724800000000),
        (3, -160016072103120889734220008520186635716535876963894778206163, 368124444991158768643770515884552507883520000000),
        (4, -43957294777027744057954509908722978588241529849763498950943243519, 59033774633127642535237380910940965809684480000000),
        (5, -629164589608248104467698880782407783354055048923054147055246981991, 2270529793581832405201437727343883300372480000000),
        (6, -561494005315979041867060932019590242887711863213370284677492544311, 15406277632738567392671167835205638553600000000),
        (7, -26797298660731670641454526235861758497425356511634600634567329837314501, 12298703048568258861507787689779367877017600000000),
        (8, -311726259114880797655575882327873196190436034291789353375275928905958677, 4541059587163664810402875454687766600744960000000),
        (9, -174123312485075568686617912824737955137681453184439307320829360148330233, 139012028178479535012332922082278569410560000000),
        (10, -960769308827902385824415706232438295197726801596682225296294457590575559337, 68115893807454972156043131820316499011174400000000),
        (11, -75236400071613777335892232301809636583821119350879519533721537318432310091, 734583168511769307565171029434785773649920000000),
        (12, -41163105194863655270282179672512308325045358552623642641121986874325207505449, 83252759098000521524052716669275721013657600000000),
        (13, -75140466956656364291295083879906784554625309482627407104201557816766644634413, 46383680068886004849115085001453615993323520000000),
        (14, -5575052139923600539245020934743240894380374641634994331787147185619699756001, 1527932990504480159735555741224354409191833600000),
        (15, -237217998400768277566076066790525625618360247669029189399904903839609477777, 41737680029077801566202899399703737139200000000),
        (16, -769930818026160260701105844963044631608980638617187844160998364316227094491, 125817934000698300373481203987512714854400000000),
        (17, -333580889529153211428814159812919268973608302783270561400109854614760520409757, 73792218291409553169046726138676207262105600000000),
        (18, -3073007135804392409381795123299152270774720491548329071393348979978320533531, 1362317876149099443120862636406329980223488000000),
        (19, -862748730908496652537666541706810585770792053387594028169022065140105797513, 1165140288811729786879685149558045377822720000000),
        (20, -3334224979202841681213566515787772247357319903268111600966372845600814521, 21757988586586924124737351065509717606400000000),
        (21, -11760705071268221718540844109029060353961922230309079395049531734944006319, 630702720439397890333732702039967583436800000000),
        (22, -516316921653194618856879336419566346988152153733965574671355439000673279, 438172416305265902758172192996188005335040000000),
        (23, -50843981836742329221437042240926970850398812657408241934940234976761, 1720098328471085155455634641927184318464000000),
        (24, -163227213882286114394934533424912607751813806674825008888422633255753, 1665055181960010430481054333385514420273152000000),
        (25, 46591106522568160786608898445842202666579719302342241871049585817, 2312576641611125597890353240813214472601600000000),
        (26, 382306393812626271731150385433262640923876289193909518599836700243, 49194812194273035446031150759117471508070400000000),
        (27, -11466820970297631721442250904905032375764013088457847706080170769, 15812618205302047107652869886859187270451200000000),
        (28, 421985970143729456868537391217938179901522075806802045094024383, 973084197249356745086330454575949985873920000000),
        (29, -175041931078196267038661196537726984490745200552027559154192863, 641671463403561331904754140336314845757440000000),
        (30, 507281247845007989247797977971386058613944464384609938733770061, 3279654146284869029735410050607831433871360000000),
        (31, -3332353600085372813934833244578206784699713356681769746349393, 41737680029077801566202899399703737139200000000),
        (32, 92855875633804068653815468509214314183818724319374990513156911, 2480410698870909350220058021468107807129600000000),
        (33, -303433461319367877274698131600620980635506873245881829721702171, 19099162381306001996694446765304430114897920000000),
        (34, 14454912141850824721789506720094583775750140453351741837094653, 2378650259942872043544363333407877743247360000000),
        (35, -130151372094274024084516970492636282353398788717184386505577159, 62439569323500391143039537501956790760243200000000),
        (36, 19097914933900706260326258387056172743137989717427418046463621, 29970993275280187748658978000939259564916736000000),
        (37, -5868365907562753811760738974301602693679744146595286393820317, 34057946903727486078021565910158249505587200000000),
        (38, 10906504373002776593729399166735014906948387432357333278907, 267121152186097930023698556158103917690880000000),
        (39, -179230197186530337467787795658327252764917259940507774843, 21389048780118711063491804677877161525248000000),
        (40, 22791952014073147357579201479939992700881929123781417139541, 15535203850823063825062468660773938370969600000000),
        (41, -348352650592268902770092349575143083369593940867643428437, 1621806995415594575143884090959916643123200000000),
        (42, 7550413935766077510784509454197772619488797965401172374213, 295168873165638212676186904554704829048422400000000),
        (43, -2341862946322158947011062887015968302039850655792366527, 983896243885460708920623015182349430161408000000),
        (44, 8107752180428683743964678905252743751382358589655654349, 49951655458800312914431630001565432608194560000000),
        (45, -35134176929405168784575271925798319446112930429908851841, 4870286407233030509157083925152629679298969600000000),
        (46, 1527335577854677023023224272800947125313629267269390501, 9740572814466061018314167850305259358597939200000000),
    )),
    (24, (
        (0, -183856455668177802003316143799518064719008299958634826921, 14026424852831127866372401704439573476381032448000000000),
        (1, 142204256294154799654954061396997010330955361147666512731, 292217184433981830549425035509157780757938176000000000),
        (2, 1857573771900293990622362886831212709615417955855161834393443, 53130397169814878281713642819846869228716032000000000),
        (3, 1143870379551618055203157175273876323510390353466217807261763032251, 876651553301945491648275106527473342273814528000000000),
        (4, 233584893118240359766012954774228912208769207480674861058326023567679, 77924582515728488146513342802442074868783513600000000),
        (5, 1141112186261037801351930451648527248976864577226525309824198574311241, 805006017724467852753237012421922261041152000000000),
        (6, 12236619698335189897623532579550826045732657618168602139785885540211790877, 53130397169814878281713642819846869228716032000000000),
        (7, 148290311536950242462210791225286678211423405869225823240513697580163826153, 8855066194969146380285607136641144871452672000000000),
        (8, 4097957704451759097183837379909230246950583424269966146114878423259259399767, 6440048141795742822025896099375378088329216000000000),
        (9, 878881496822471403698517997124435725601599166348931379685269794013966934621, 63000470952349658041557679233020003038003200000000),
        (10, 770992150005067506437154174167000629272536998902738633636432149645930821387237, 4086953628447298329362587909218989940670464000000000),
        (11, 37055565524893892239666952019712127493670852250507135863841751423821695116064067, 22478244956460140811494233500704444673687552000000000),
        (12, 2594986549802975515940085841319838002904492169957446584643831510289095738849442531, 269738939477521689737930802008453336084250624000000000),
        (13, 339723991422398697708865722645668794268545263008852142360164634218712306216815749, 8855066194969146380285607136641144871452672000000000),
        (14, 4136305350234830910342748167721952273471773074395824537480844951008599461133830491, 38962291257864244073256671401221037434391756800000000),
        (15, 3535176013867223058014017433820101779560815863198893551975994012125373766847928239, 17189246143175401797025002088773987103408128000000000),
        (16, 2331769555638138553634958325669539751213516104685989132152365779290604458028343171, 8334179948206255416739394952132842231955456000000000),
        (17, 1180162337396294488780731699812435905231120869191747205808066642860473428444600919, 4427533097484573190142803568320572435726336000000000),
        (18, 610604231945503548749223482323278016613260210066757997381856526730272260219393667, 3465025902379231192285672357816100167090176000000000),
        (19, 19195711686608624330963833955569440612611611539183185766612431308863039115347361, 241501805317340355825971103726576678312345600000000),
        (20, 4997601286435863919718418656782284093066065494933357348141892551136564482147727, 210001569841165526805192264110066676793344000000000),
        (21, 180474858441839566025060139526082230201782238820911664781824977648307884727360359, 39847797877361158711285232114885151921537024000000000),
        (22, 16583168369458472111724637360509607487460469252853834058851253055596143625267851, 32468576048220203394380559501017531195326464000000000),
        (23, 37636573477006786170735528311006417041755802718053806961071873057248949437753, 1248791386470007822860790750039135815204864000000000),
        (24, 7051982509847951659450998942230919907152098405759983416701228647597657837, 9907766371993450495424455537500581674352640000000),
        (25, 2815040966277544646461861254766983203985180094287091691226016063276340753, 1248791386470007822860790750039135815204864000000000),
        (26, -20963093862283916683449083439957096532894234030338846825953601375337909, 32468576048220203394380559501017531195326464000000000),
        (27, -5711174098165325663045151030679489064280779018985841135810919919997601, 39847797877361158711285232114885151921537024000000000),
        (28, 113783056279870901245513023145064231230521520387040581658235466933331, 53130397169814878281713642819846869228716032000000000),
        (29, -470975896162301149358120399583570427071936132998675476953700234669, 2656519858490743914085682140992343461435801600000000),
        (30, 1261779179132310293882952666704160625016608887461956977981559258031, 7245054159520210674779133111797300349370368000000000),
        (31, -39763578121145003597803731527388808241349901396402493612950331411, 402503008862233926376618506210961130520576000000000),
        (32, 18099087382284822244920814905035066263972513351771698196504359797, 362355649922011105075625867484036618780672000000000),
        (33, -394067359047115459012881323482893127347539094510835432385589057961, 17189246143175401797025002088773987103408128000000000),
        (34, 369502873339993748413664436447167903373444915536228504214542493211, 38962291257864244073256671401221037434391756800000000),
        (35, -31134586405939391194301381275719904485377294845275252277300752851, 8855066194969146380285607136641144871452672000000000),
        (36, 312995578881745057702949913420573201237621375566850660672389356771, 269738939477521689737930802008453336084250624000000000),
        (37, -7594813231144553632259193521538781751611139782284048694272803413, 22478244956460140811494233500704444673687552000000000),
        (38, 350603261829710002927288176820632639220220347655723975177328037, 4086953628447298329362587909218989940670464000000000),
        (39, -297794483859206962780350170051318847526574985513803203013763247, 15939119150944463484514092845954060768614809600000000),
        (40, 241237072505585483932733167020431294322703672119897386937327037, 70840529559753171042284857093129158971621376000000000),
        (41, -17436618757876018229675874374846015933074841084110568526059, 35000261640194254467532044018344446132224000000000),
        (42, 258624365200083706948937858774724114678037235593991498614327, 4830036106346807116519422074531533566246912000000000),
        (43, -1196187024388517832991753452487266611854326902749815751363, 385002878042136799142852484201788907454464000000000),
        (44, -13362756847065101738215588897168600969908378094226646663361, 77924582515728488146513342802442074868783513600000000),
        (45, 56462509405911872000904109684688456964481528992175746338851, 876651553301945491648275106527473342273814528000000000),
        (46, -402227013475093160854717499028760585508354870231020927837, 53130397169814878281713642819846869228716032000000000),
        (47, 138036388332537491312619415615489650959599421940553111891, 292217184433981830549425035509157780757938176000000000),
        (48, -183856455668177802003316143799518064719008299958634826921, 14026424852831127866372401704439573476381032448000000000),
    )),
    (25, (
        (0, -2583312098861137963745902036370496943872138148651712093816393, 1178219687637814740775281743172924172016006725632000000000),
        (1, 64674495276604542934065988145425485801167966789533977129547547, 589109843818907370387640871586462086008003362816000000000),
        (2, -12225598699338982660139684277216904866642542598137365682878710311, 168317098233973534396468820453274881716572389376000000000),
        (3, -41196168165762253424046734486028034074884556180105015147837916672819, 10519818639623345899779301278329680107285774336000000000),
        (4, -22046480703530050560579839355016670366982164930741190498467398057444751, 1829533676456234069526835004926900888223612928000000000),
        (5, -552576715833597916332422450776764431394747116187091564347081468391989253, 76507771924533424725667645660579491689351086080000000),
        (6, -20257646106921781060770996972639192780762525515854256511620611113230351675039, 14026424852831127866372401704439573476381032448000000000),
        (7, -239800037807172343695812239886545106665945628784758948374005312072429220213, 1886286290052599228936579035024149203386368000000000),
        (8, -642436939828570650222112287265770830482336567422498196684707955180279004543653, 110880828876135398153141515450115205346885632000000000),
        (9, -580092822317741299729130302220576488627234014424382424388314325084488702059341273, 3825388596226671236283382283028974584467554304000000000),
        (10, -3740445561411974625209525053620785197952214492998477114794136082706858872539409301, 1530155438490668494513352913211589833787021721600000000),
        (11, -268158869292561602376314737401076481362086187882078309491596694000389379869711989073, 10519818639623345899779301278329680107285774336000000000),
        (12, -576446117723848714205520813126251510209098034664030102047341321376583220092987300413, 3236867273730260276855169624101440033011007488000000000),
        (13, -17982525829786421943915405259166198746984989571482343634680800078469694774296760974403, 21039637279246691799558602556659360214571548672000000000),
        (14, -7097541150362548229738165549927516268624268257789921139993744087253506004040609594869, 2475251444617257858771600300783454142890770432000000000),
        (15, -13904956533920351381783949298040384759865904648928731094485227620397391670951299127, 2044668345893750417838542522513057358073036800000000),
        (16, -2543396267556619492736363343670913534788643406130797402979841347595048428867315335247, 221761657752270796306283030900230410693771264000000000),
        (17, -386125944386802220549206377710314189179273999089897705125802633634856889942930961004191, 28052849705662255732744803408879146952762064896000000000),
        (18, -179052222406215791873224652347173678146150380592234237408031044396933544789430664568019, 15301554384906684945133529132115898337870217216000000000),
        (19, -3334307577913048750616474541387292893535058433780500544107103643350890893866028779221, 478173574528333904535422785378621823058444288000000000),
        (20, -3366931782815731543315079616396356570906782973784484516631235654100228402757153371, 1177042644992821918856425317855069102913093632000000),
        (21, -750972540148984770530955641303954955217926296781892517131806176241736931226331832093, 956347149056667809070845570757243646116888576000000000),
        (22, -2904549955483250202388248605935213630964798828290798580757766963504103651022919613237, 21039637279246691799558602556659360214571548672000000000),
        (23, -76180859138923842131886194908077262231711126818866681560837866042228589362538597577, 5259909319811672949889650639164840053642887168000000000),
        (24, -3743562542905306856191901448975557742791219502720674268741085443299065847782097557, 4675474950943709288790800568146524492127010816000000000),
        (25, -3209971161481135151261395572601698016280577810746257375884052266955548865659857, 179825959651681126491953868005635557389500416000000000),
        (26, -252871081266716534312361620358518621508710416709267060677885772090289724312597, 4675474950943709288790800568146524492127010816000000000),
        (27, 9064466956236785288461183795127267413080980148767854061706929945408658293, 478173574528333904535422785378621823058444288000000000),
        (28, 60985291947244141378733250651326712881045236186204994273211871241529777163, 21039637279246691799558602556659360214571548672000000000),
        (29, 103082160289490567128114692857775433569227336462998983524351199528648067, 956347149056667809070845570757243646116888576000000000),
        (30, -1606851778274216338370110603641869366418580025525036674991642174045407, 15301554384906684945133529132115898337870217216000000),
        (31, 81228658637757062140122956772927485339536672792821630756408520206349, 1222950318486787479630237302758623588384768000000000),
        (32, -602934492734008482981868873092349226159111576402087191322695565191608019, 15301554384906684945133529132115898337870217216000000000),
        (33, 46391506298963900456819558305379800416672667164866283277378483349729893, 2157911515820173517903446416067626688674004992000000000),
        (34, -603198094615888140234374572004731523937293397719552850131409563700586771, 56105699411324511465489606817758293905524129792000000000),
        (35, 3447607913121400560567658462106124778869649541697081144237440163427039, 701321242641556393318620085221978673819051622400000000),
        (36, -86213176791733916432903895196522958731222646163235957353399097884230533, 42079274558493383599117205113318720429143097344000000000),
        (37, 16315565181754870964328373378744302135748670980997246825700700655058397, 21039637279246691799558602556659360214571548672000000000),
        (38, -78091146308648499422518296620277284344509035414487603066477911391383, 294260661248205479714106329463767275728273408000000000),
        (39, 37361432180417996011966454791186823362385409074943692475235954997369, 457383419114058517381708751231725222055903232000000000),
        (40, -34385533761760960376894564663403401854525771487422492312141580442901, 1530155438490668494513352913211589833787021721600000000),
        (41, 20974911493784877258174482272227387019764945850087085086502843251367, 3825388596226671236283382283028974584467554304000000000),
        (42, -428224806699048989995288847369691896739676367294992803882042015317, 364322723450159165360322122193235674711195648000000000),
        (43, 3670374424095586504555180612214795474084828511553347352791564737, 16778020158888908931067466153635853440647168000000000),
        (44, -488330756353791883795715016895637087454111598890355472581420385759, 14026424852831127866372401704439573476381032448000000000),
        (45, 3907866938879852316956472726105178637967603324534127329459712297, 841585491169867671982344102266374408582861946880000000),
        (46, -1634148375414143864399842982329398595494944333968813320037994941, 3236867273730260276855169624101440033011007488000000000),
        (47, 452084982577644695557779606508038640475992496585043426983684381, 10519818639623345899779301278329680107285774336000000000),
        (48, -26596043170681962143033593166635146285308910927491115290732983, 9901005778469031435086401203133816571563081728000000000),
        (49, 5871865858424228414666517289754727577774695642262824091649137, 53555440347173397307967351962405644182545760256000000000),
        (50, -2583312098861137963745902036370496943872138148651712093816393, 1178219687637814740775281743172924172016006725632000000000),
    )),
)
