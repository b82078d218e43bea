// Generated by tools/make_sample_data. Do not edit by hand.
#include "oulad/ingest_detail.hpp"

namespace oulad::detail {
namespace {

const char* const kCourses = R"csv(code_module,code_presentation,module_presentation_length
AAA,2013J,268
)csv";

const char* const kAssessments = R"csv(code_module,code_presentation,id_assessment,assessment_type,date,weight
AAA,2013J,14000,TMA,19,10
AAA,2013J,14001,TMA,54,20
AAA,2013J,14002,CMA,117,30
AAA,2013J,14003,TMA,166,40
AAA,2013J,14004,Exam,,100
)csv";

const char* const kVle = R"csv(id_site,code_module,code_presentation,activity_type,week_from,week_to
600000,AAA,2013J,dataplus,4,24
600001,AAA,2013J,dualpane,,
600002,AAA,2013J,externalquiz,,
600003,AAA,2013J,folder,-1,17
600004,AAA,2013J,forumng,,
600005,AAA,2013J,glossary,1,13
600006,AAA,2013J,homepage,,
600007,AAA,2013J,htmlactivity,,
600008,AAA,2013J,oucollaborate,-2,30
600009,AAA,2013J,oucontent,,
600010,AAA,2013J,ouelluminate,4,12
600011,AAA,2013J,ouwiki,,
600012,AAA,2013J,page,,
600013,AAA,2013J,questionnaire,3,28
600014,AAA,2013J,quiz,,
600015,AAA,2013J,repeatactivity,-2,14
600016,AAA,2013J,resource,4,25
600017,AAA,2013J,sharedsubpage,1,21
600018,AAA,2013J,subpage,,
600019,AAA,2013J,url,,
600020,AAA,2013J,sharedsubpage,,
600021,AAA,2013J,dataplus,-2,15
600022,AAA,2013J,dataplus,,
600023,AAA,2013J,page,,
600024,AAA,2013J,questionnaire,,
600025,AAA,2013J,glossary,-1,26
600026,AAA,2013J,glossary,,
600027,AAA,2013J,sharedsubpage,,
600028,AAA,2013J,homepage,,
600029,AAA,2013J,quiz,,
600030,AAA,2013J,ouelluminate,-1,18
600031,AAA,2013J,dualpane,,
600032,AAA,2013J,subpage,,
600033,AAA,2013J,repeatactivity,,
600034,AAA,2013J,externalquiz,4,6
600035,AAA,2013J,ouwiki,,
600036,AAA,2013J,dualpane,,
600037,AAA,2013J,repeatactivity,,
600038,AAA,2013J,subpage,,
600039,AAA,2013J,resource,,
)csv";

const char* const kStudentInfo = R"csv(code_module,code_presentation,id_student,gender,region,highest_education,imd_band,age_band,num_of_prev_attempts,studied_credits,disability,final_result
AAA,2013J,103931,F,London Region,No Formal quals,60-70%,0-35,0,90,N,Fail
AAA,2013J,141196,F,Wales,A Level or Equivalent,0-10%,55<=,0,60,N,Distinction
AAA,2013J,142087,M,Wales,No Formal quals,30-40%,55<=,0,180,N,Fail
AAA,2013J,173729,F,London Region,Post Graduate Qualification,70-80%,35-55,3,120,N,Distinction
AAA,2013J,205055,F,London Region,Post Graduate Qualification,50-60%,35-55,0,210,N,Distinction
AAA,2013J,234582,M,West Midlands Region,A Level or Equivalent,60-70%,55<=,0,210,Y,Fail
AAA,2013J,244080,F,West Midlands Region,No Formal quals,50-60%,55<=,0,90,N,Distinction
AAA,2013J,297233,F,Scotland,Post Graduate Qualification,10-20%,55<=,0,240,N,Fail
AAA,2013J,297849,F,East Anglian Region,HE Qualification,50-60%,0-35,1,240,N,Pass
AAA,2013J,298879,M,Wales,No Formal quals,80-90%,0-35,0,240,N,Withdrawn
AAA,2013J,319092,M,West Midlands Region,Post Graduate Qualification,70-80%,55<=,2,120,N,Pass
AAA,2013J,389217,F,East Anglian Region,Post Graduate Qualification,50-60%,35-55,0,150,N,Pass
AAA,2013J,403868,M,South East Region,No Formal quals,60-70%,35-55,0,180,N,Fail
AAA,2013J,469748,F,London Region,Lower Than A Level,60-70%,0-35,0,210,N,Pass
AAA,2013J,502585,M,Scotland,A Level or Equivalent,50-60%,35-55,0,120,N,Fail
AAA,2013J,536709,F,East Anglian Region,HE Qualification,0-10%,0-35,0,60,N,Pass
AAA,2013J,568210,F,South East Region,Post Graduate Qualification,70-80%,35-55,0,150,N,Fail
AAA,2013J,571628,F,North Western Region,Post Graduate Qualification,30-40%,35-55,0,120,N,Distinction
AAA,2013J,587737,F,Scotland,Lower Than A Level,90-100%,55<=,0,90,N,Fail
AAA,2013J,631572,M,Scotland,Lower Than A Level,80-90%,55<=,0,180,N,Fail
AAA,2013J,638241,F,Scotland,No Formal quals,40-50%,0-35,0,180,N,Fail
AAA,2013J,662746,F,South East Region,HE Qualification,50-60%,35-55,0,120,N,Pass
AAA,2013J,669161,M,Scotland,HE Qualification,50-60%,55<=,3,30,N,Pass
AAA,2013J,692187,M,East Anglian Region,Post Graduate Qualification,20-30%,35-55,0,180,N,Pass
AAA,2013J,738707,F,Scotland,A Level or Equivalent,10-20%,35-55,0,210,N,Distinction
AAA,2013J,765872,F,South East Region,Lower Than A Level,,0-35,0,90,N,Withdrawn
AAA,2013J,782363,M,East Anglian Region,Post Graduate Qualification,30-40%,35-55,0,240,N,Withdrawn
AAA,2013J,881947,M,Ireland,A Level or Equivalent,,55<=,0,120,N,Distinction
AAA,2013J,920801,M,Ireland,No Formal quals,60-70%,35-55,0,240,N,Pass
AAA,2013J,979672,M,East Anglian Region,Lower Than A Level,50-60%,35-55,0,60,N,Pass
AAA,2013J,996680,F,North Western Region,A Level or Equivalent,40-50%,55<=,0,30,N,Withdrawn
AAA,2013J,1025888,F,Wales,No Formal quals,50-60%,35-55,0,240,Y,Pass
AAA,2013J,1036928,F,Wales,Post Graduate Qualification,20-30%,55<=,0,180,N,Fail
AAA,2013J,1043146,F,Wales,A Level or Equivalent,0-10%,55<=,0,30,N,Distinction
AAA,2013J,1077949,F,West Midlands Region,No Formal quals,70-80%,55<=,0,90,N,Distinction
AAA,2013J,1094458,M,South East Region,No Formal quals,40-50%,0-35,0,210,N,Fail
AAA,2013J,1111750,M,North Western Region,No Formal quals,30-40%,0-35,3,150,N,Distinction
AAA,2013J,1162251,F,East Anglian Region,No Formal quals,80-90%,55<=,2,150,N,Fail
AAA,2013J,1219308,F,South East Region,Post Graduate Qualification,90-100%,35-55,0,90,N,Pass
AAA,2013J,1329285,M,North Western Region,Lower Than A Level,90-100%,55<=,0,30,N,Fail
AAA,2013J,1329846,F,East Anglian Region,No Formal quals,20-30%,35-55,0,150,N,Withdrawn
AAA,2013J,1372954,M,Scotland,HE Qualification,20-30%,35-55,0,240,N,Distinction
AAA,2013J,1399552,F,London Region,No Formal quals,30-40%,55<=,0,60,N,Distinction
AAA,2013J,1422659,M,Scotland,HE Qualification,90-100%,35-55,0,150,N,Pass
AAA,2013J,1439507,F,South East Region,Post Graduate Qualification,50-60%,55<=,0,150,N,Distinction
AAA,2013J,1524857,M,West Midlands Region,Post Graduate Qualification,30-40%,0-35,0,30,N,Fail
AAA,2013J,1565732,M,West Midlands Region,Lower Than A Level,20-30%,0-35,0,30,N,Pass
AAA,2013J,1593805,F,West Midlands Region,No Formal quals,80-90%,0-35,0,180,N,Distinction
AAA,2013J,1600156,F,North Western Region,Post Graduate Qualification,70-80%,0-35,0,210,N,Fail
AAA,2013J,1684182,M,South East Region,HE Qualification,,55<=,0,60,N,Pass
AAA,2013J,1929174,M,South East Region,Lower Than A Level,40-50%,55<=,0,210,N,Fail
AAA,2013J,1931014,F,Wales,Post Graduate Qualification,30-40%,35-55,0,30,N,Withdrawn
AAA,2013J,1984154,F,West Midlands Region,A Level or Equivalent,60-70%,0-35,0,30,N,Pass
AAA,2013J,2055757,M,South East Region,Post Graduate Qualification,50-60%,0-35,0,210,N,Distinction
AAA,2013J,2178466,F,Ireland,No Formal quals,70-80%,0-35,0,180,N,Fail
AAA,2013J,2185923,M,London Region,HE Qualification,70-80%,35-55,0,240,N,Pass
AAA,2013J,2190805,F,East Anglian Region,Post Graduate Qualification,60-70%,35-55,0,240,N,Fail
AAA,2013J,2244158,M,East Anglian Region,HE Qualification,50-60%,35-55,1,210,N,Pass
AAA,2013J,2254623,F,Scotland,A Level or Equivalent,40-50%,55<=,0,210,N,Fail
AAA,2013J,2258611,F,Wales,No Formal quals,60-70%,0-35,0,120,N,Fail
AAA,2013J,2275036,F,Scotland,Lower Than A Level,40-50%,0-35,0,30,N,Fail
AAA,2013J,2294292,M,South East Region,HE Qualification,40-50%,55<=,0,60,N,Distinction
AAA,2013J,2359995,M,East Anglian Region,HE Qualification,10-20%,0-35,0,150,N,Fail
AAA,2013J,2419536,F,West Midlands Region,HE Qualification,10-20%,55<=,3,60,Y,Distinction
AAA,2013J,2435184,M,North Western Region,HE Qualification,80-90%,0-35,0,120,N,Fail
AAA,2013J,2483222,M,London Region,A Level or Equivalent,50-60%,35-55,0,90,N,Distinction
AAA,2013J,2524021,M,West Midlands Region,HE Qualification,20-30%,55<=,0,150,N,Distinction
AAA,2013J,2557482,F,Wales,A Level or Equivalent,70-80%,35-55,0,210,N,Withdrawn
AAA,2013J,2581442,M,Scotland,Post Graduate Qualification,20-30%,0-35,0,90,Y,Distinction
AAA,2013J,2643808,M,North Western Region,No Formal quals,,55<=,0,210,N,Pass
)csv";

const char* const kStudentRegistration = R"csv(code_module,code_presentation,id_student,date_registration,date_unregistration
AAA,2013J,103931,-100,
AAA,2013J,141196,-75,
AAA,2013J,142087,-102,
AAA,2013J,173729,-94,
AAA,2013J,205055,-103,
AAA,2013J,234582,-35,
AAA,2013J,244080,-88,
AAA,2013J,297233,-56,
AAA,2013J,297849,-13,
AAA,2013J,298879,-66,41
AAA,2013J,319092,-103,
AAA,2013J,389217,-111,
AAA,2013J,403868,-24,
AAA,2013J,469748,-55,
AAA,2013J,502585,-17,
AAA,2013J,536709,-75,
AAA,2013J,568210,-20,
AAA,2013J,571628,-106,
AAA,2013J,587737,-68,
AAA,2013J,631572,-99,
AAA,2013J,638241,-82,
AAA,2013J,662746,-51,
AAA,2013J,669161,-59,
AAA,2013J,692187,-117,
AAA,2013J,738707,-84,
AAA,2013J,765872,-91,157
AAA,2013J,782363,-94,205
AAA,2013J,881947,-61,
AAA,2013J,920801,-101,
AAA,2013J,979672,,
AAA,2013J,996680,-21,144
AAA,2013J,1025888,-48,
AAA,2013J,1036928,-32,
AAA,2013J,1043146,-18,
AAA,2013J,1077949,-120,
AAA,2013J,1094458,-71,
AAA,2013J,1111750,-40,
AAA,2013J,1162251,-61,
AAA,2013J,1219308,-32,
AAA,2013J,1329285,-93,
AAA,2013J,1329846,-75,163
AAA,2013J,1372954,-57,
AAA,2013J,1399552,-75,
AAA,2013J,1422659,-36,
AAA,2013J,1439507,-95,
AAA,2013J,1524857,-23,
AAA,2013J,1565732,-84,
AAA,2013J,1593805,-13,
AAA,2013J,1600156,-84,
AAA,2013J,1684182,-76,
AAA,2013J,1929174,-54,
AAA,2013J,1931014,-66,204
AAA,2013J,1984154,-90,
AAA,2013J,2055757,-108,
AAA,2013J,2178466,-9,
AAA,2013J,2185923,-114,
AAA,2013J,2190805,-53,
AAA,2013J,2244158,-6,
AAA,2013J,2254623,-86,
AAA,2013J,2258611,-60,
AAA,2013J,2275036,-113,
AAA,2013J,2294292,-22,
AAA,2013J,2359995,-23,
AAA,2013J,2419536,-9,
AAA,2013J,2435184,-3,
AAA,2013J,2483222,-62,
AAA,2013J,2524021,-61,
AAA,2013J,2557482,-34,-7
AAA,2013J,2581442,-80,
AAA,2013J,2643808,-66,
)csv";

const char* const kStudentAssessment = R"csv(id_assessment,id_student,date_submitted,is_banked,score
14000,103931,20,0,42
14001,103931,45,0,69
14002,103931,113,0,13
14003,103931,162,0,86
14004,103931,269,0,79
14001,141196,57,0,
14002,141196,121,0,87
14003,141196,155,0,14
14004,141196,267,0,98
14000,142087,14,1,22
14001,142087,43,0,88
14002,142087,120,0,16
14003,142087,155,0,42
14004,142087,270,0,34
14001,173729,52,0,
14002,173729,110,0,
14003,173729,164,0,
14004,173729,257,0,52
14000,205055,19,0,83
14001,205055,43,0,77
14003,205055,161,0,35
14004,205055,262,0,19
14000,234582,15,0,55
14001,234582,57,0,74
14002,234582,105,0,68
14003,234582,156,0,98
14004,234582,273,0,92
14000,244080,13,0,85
14001,244080,56,0,79
14002,244080,115,0,70
14003,244080,155,0,16
14004,244080,270,0,25
14000,297233,17,0,85
14001,297233,52,0,56
14002,297233,110,0,51
14003,297233,171,0,44
14004,297233,268,0,93
14000,297849,12,0,76
14001,297849,59,0,42
14003,297849,160,1,17
14004,297849,259,0,23
14000,298879,7,0,96
14000,319092,22,0,9
14001,319092,56,0,84
14002,319092,120,0,8
14003,319092,160,0,36
14004,319092,265,0,6
14000,389217,12,0,11
14001,389217,49,0,34
14002,389217,117,0,55
14004,389217,267,0,81
14000,403868,12,0,87
14001,403868,42,0,19
14002,403868,122,0,
14003,403868,161,0,38
14004,403868,269,0,88
14000,469748,21,0,69
14002,469748,117,0,52
14003,469748,157,0,63
14004,469748,257,0,53
14000,502585,18,0,14
14001,502585,43,0,28
14002,502585,121,0,77
14003,502585,166,0,6
14004,502585,259,0,73
14000,536709,23,0,76
14001,536709,47,0,27
14002,536709,109,0,85
14003,536709,156,0,71
14004,536709,269,0,33
14000,568210,23,0,6
14002,568210,113,0,83
14004,568210,266,0,60
14000,571628,11,0,70
14001,571628,53,0,79
14002,571628,119,0,89
14004,571628,271,0,13
14000,587737,19,0,98
14001,587737,51,0,85
14002,587737,116,0,
14003,587737,160,0,5
14004,587737,267,0,76
14000,631572,17,0,42
14001,631572,49,1,37
14002,631572,120,0,19
14003,631572,167,0,57
14004,631572,267,0,52
14000,638241,13,0,39
14001,638241,55,0,44
14002,638241,105,0,82
14003,638241,162,0,65
14004,638241,262,0,83
14000,662746,18,0,91
14001,662746,56,0,11
14002,662746,119,0,19
14003,662746,166,0,94
14004,662746,272,0,97
14000,669161,10,0,
14001,669161,53,0,39
14002,669161,117,0,35
14003,669161,158,0,36
14004,669161,258,0,10
14000,692187,15,0,
14001,692187,51,0,39
14002,692187,122,0,5
14003,692187,164,1,98
14004,692187,257,0,85
14000,738707,23,0,38
14001,738707,51,0,47
14002,738707,120,0,82
14003,738707,161,0,60
14004,738707,258,0,72
14000,765872,13,0,25
14000,782363,9,0,25
14001,782363,43,1,29
14002,782363,110,0,56
14003,782363,170,0,26
14000,881947,23,0,99
14001,881947,47,0,40
14003,881947,167,0,53
14004,881947,267,0,84
14000,920801,18,0,60
14001,920801,44,0,19
14002,920801,118,0,63
14003,920801,166,0,37
14004,920801,269,0,76
14000,979672,9,0,26
14002,979672,110,0,70
14003,979672,161,0,49
14004,979672,261,0,3
14000,996680,17,0,80
14001,996680,43,0,5
14000,1025888,15,0,53
14001,1025888,50,0,38
14002,1025888,112,0,96
14004,1025888,265,0,58
14000,1036928,9,0,76
14001,1036928,50,0,10
14002,1036928,121,0,26
14003,1036928,167,0,5
14004,1036928,256,0,90
14000,1043146,19,0,38
14001,1043146,43,0,40
14002,1043146,122,0,90
14003,1043146,163,0,64
14004,1043146,261,0,50
14000,1077949,9,0,14
14001,1077949,58,0,74
14002,1077949,119,0,14
14003,1077949,171,0,33
14004,1077949,261,0,63
14000,1094458,19,0,82
14001,1094458,48,0,97
14002,1094458,121,0,85
14003,1094458,162,0,92
14004,1094458,262,0,70
14000,1111750,10,0,42
14001,1111750,47,0,10
14002,1111750,109,0,3
14003,1111750,156,0,76
14004,1111750,267,0,2
14000,1162251,21,0,48
14001,1162251,54,0,92
14002,1162251,109,0,65
14003,1162251,165,0,55
14004,1162251,269,0,84
14000,1219308,13,0,24
14001,1219308,42,0,48
14002,1219308,110,0,14
14003,1219308,160,0,61
14004,1219308,260,1,100
14000,1329285,11,0,31
14001,1329285,45,0,
14002,1329285,110,0,34
14003,1329285,157,0,90
14004,1329285,263,0,57
14000,1329846,18,0,10
14001,1329846,57,0,63
14002,1329846,111,0,98
14000,1372954,15,0,58
14001,1372954,45,0,51
14002,1372954,107,0,74
14003,1372954,162,0,72
14004,1372954,263,0,71
14000,1399552,22,0,87
14001,1399552,50,0,10
14002,1399552,111,0,23
14003,1399552,161,0,11
14004,1399552,262,0,
14000,1422659,10,0,5
14001,1422659,43,0,
14002,1422659,109,0,28
14003,1422659,170,0,19
14004,1422659,262,0,61
14000,1439507,22,0,1
14001,1439507,48,0,67
14002,1439507,113,0,24
14003,1439507,166,0,60
14004,1439507,265,0,88
14000,1524857,12,0,12
14001,1524857,47,1,
14002,1524857,121,0,18
14003,1524857,158,0,
14000,1565732,15,0,87
14001,1565732,44,0,47
14002,1565732,114,0,32
14003,1565732,167,0,65
14004,1565732,256,0,10
14001,1593805,55,0,21
14002,1593805,113,0,58
14003,1593805,165,0,31
14004,1593805,271,0,41
14000,1600156,11,0,
14001,1600156,50,0,15
14002,1600156,119,0,35
14003,1600156,163,0,27
14004,1600156,271,0,96
14000,1684182,20,0,60
14001,1684182,59,0,
14002,1684182,109,0,11
14003,1684182,161,0,63
14004,1684182,266,0,75
14000,1929174,17,1,16
14001,1929174,43,0,87
14002,1929174,113,0,14
14003,1929174,169,0,54
14004,1929174,270,0,70
14000,1931014,17,0,97
14001,1931014,47,0,11
14002,1931014,107,0,8
14003,1931014,169,0,1
14000,1984154,15,0,76
14001,1984154,44,0,30
14002,1984154,111,0,85
14003,1984154,162,0,
14000,2055757,11,0,15
14001,2055757,44,0,67
14002,2055757,121,0,34
14003,2055757,162,0,76
14000,2178466,11,0,59
14001,2178466,56,0,4
14002,2178466,106,0,34
14004,2178466,266,0,37
14000,2185923,20,0,16
14001,2185923,55,0,6
14002,2185923,118,0,77
14003,2185923,156,0,65
14004,2185923,269,0,80
14000,2190805,14,0,89
14003,2190805,168,0,51
14004,2190805,256,0,64
14000,2244158,16,0,61
14001,2244158,46,0,57
14002,2244158,114,0,18
14003,2244158,159,0,13
14004,2244158,268,0,32
14000,2254623,14,0,78
14001,2254623,43,0,49
14002,2254623,105,0,82
14000,2258611,18,0,67
14001,2258611,54,0,16
14002,2258611,113,0,40
14004,2258611,273,0,38
14000,2275036,9,0,28
14001,2275036,50,0,62
14002,2275036,117,1,22
14003,2275036,164,0,75
14000,2294292,12,0,77
14001,2294292,52,0,22
14002,2294292,111,0,82
14003,2294292,163,0,83
14004,2294292,271,0,40
14000,2359995,12,0,30
14002,2359995,113,0,82
14003,2359995,165,0,46
14004,2359995,264,0,17
14000,2419536,13,0,60
14002,2419536,122,0,44
14003,2419536,169,0,98
14004,2419536,256,0,78
14000,2435184,8,0,19
14001,2435184,48,0,69
14002,2435184,105,0,84
14003,2435184,157,0,34
14004,2435184,262,0,69
14000,2483222,19,0,14
14002,2483222,113,0,94
14003,2483222,166,0,94
14004,2483222,259,0,11
14000,2524021,14,0,4
14001,2524021,53,0,66
14002,2524021,121,0,3
14003,2524021,171,0,11
14004,2524021,272,1,30
14000,2581442,20,0,86
14001,2581442,57,0,79
14002,2581442,117,0,87
14003,2581442,165,0,37
14004,2581442,264,0,77
14000,2643808,7,0,16
14001,2643808,52,0,86
14003,2643808,160,0,17
14004,2643808,257,0,7
)csv";

const char* const kStudentVle = R"csv(code_module,code_presentation,id_student,id_site,date,sum_click
AAA,2013J,103931,600039,-13,6
AAA,2013J,103931,600033,-9,4
AAA,2013J,103931,600039,-9,2
AAA,2013J,103931,600010,-8,1
AAA,2013J,103931,600029,-8,1
AAA,2013J,103931,600032,-3,8
AAA,2013J,103931,600024,-1,7
AAA,2013J,103931,600031,-1,2
AAA,2013J,103931,600005,0,3
AAA,2013J,103931,600018,0,2
AAA,2013J,103931,600039,0,4
AAA,2013J,103931,600000,17,7
AAA,2013J,103931,600006,17,7
AAA,2013J,103931,600021,17,2
AAA,2013J,103931,600026,31,3
AAA,2013J,103931,600031,31,6
AAA,2013J,103931,600036,31,2
AAA,2013J,103931,600027,38,1
AAA,2013J,103931,600038,38,6
AAA,2013J,103931,600006,43,2
AAA,2013J,103931,600006,43,1
AAA,2013J,103931,600006,43,10
AAA,2013J,103931,600003,44,6
AAA,2013J,103931,600030,56,2
AAA,2013J,103931,600021,60,9
AAA,2013J,103931,600032,60,9
AAA,2013J,103931,600035,69,3
AAA,2013J,103931,600016,70,8
AAA,2013J,103931,600038,70,3
AAA,2013J,103931,600001,73,10
AAA,2013J,103931,600026,73,5
AAA,2013J,103931,600035,73,10
AAA,2013J,103931,600039,79,9
AAA,2013J,103931,600006,84,10
AAA,2013J,103931,600006,86,8
AAA,2013J,103931,600030,88,2
AAA,2013J,103931,600023,89,7
AAA,2013J,103931,600033,89,9
AAA,2013J,103931,600018,97,3
AAA,2013J,103931,600029,97,8
AAA,2013J,103931,600005,100,4
AAA,2013J,103931,600029,100,10
AAA,2013J,103931,600002,112,6
AAA,2013J,103931,600032,112,3
AAA,2013J,103931,600006,113,2
AAA,2013J,103931,600000,121,7
AAA,2013J,103931,600029,121,1
AAA,2013J,103931,600035,121,9
AAA,2013J,103931,600027,130,4
AAA,2013J,103931,600006,133,1
AAA,2013J,103931,600018,133,9
AAA,2013J,103931,600027,145,4
AAA,2013J,103931,600029,145,5
AAA,2013J,103931,600030,160,3
AAA,2013J,103931,600034,160,9
AAA,2013J,103931,600038,160,3
AAA,2013J,103931,600001,170,1
AAA,2013J,103931,600011,170,3
AAA,2013J,103931,600033,171,4
AAA,2013J,103931,600034,171,9
AAA,2013J,103931,600039,178,7
AAA,2013J,103931,600007,182,1
AAA,2013J,103931,600021,182,10
AAA,2013J,103931,600003,183,6
AAA,2013J,103931,600006,183,7
AAA,2013J,103931,600000,187,1
AAA,2013J,103931,600025,187,6
AAA,2013J,103931,600007,193,7
AAA,2013J,103931,600018,193,7
AAA,2013J,103931,600039,193,5
AAA,2013J,103931,600017,199,9
AAA,2013J,103931,600021,202,1
AAA,2013J,103931,600031,218,2
AAA,2013J,103931,600038,229,10
AAA,2013J,103931,600036,243,1
AAA,2013J,103931,600039,243,9
AAA,2013J,103931,600008,245,3
AAA,2013J,103931,600012,245,5
AAA,2013J,103931,600029,245,2
AAA,2013J,103931,600033,249,10
AAA,2013J,103931,600004,255,8
AAA,2013J,103931,600013,255,10
AAA,2013J,103931,600036,255,9
AAA,2013J,103931,600014,256,8
AAA,2013J,103931,600031,256,3
AAA,2013J,103931,600032,258,4
AAA,2013J,141196,600003,-5,2
AAA,2013J,141196,600014,1,10
AAA,2013J,141196,600020,1,2
AAA,2013J,141196,600016,5,4
AAA,2013J,141196,600007,24,1
AAA,2013J,141196,600015,24,1
AAA,2013J,141196,600036,24,4
AAA,2013J,141196,600006,36,8
AAA,2013J,141196,600018,36,2
AAA,2013J,141196,600030,36,10
AAA,2013J,141196,600032,38,4
AAA,2013J,141196,600016,43,2
AAA,2013J,141196,600037,43,2
AAA,2013J,141196,600014,47,9
AAA,2013J,141196,600037,47,1
AAA,2013J,141196,600037,48,7
AAA,2013J,141196,600008,52,7
AAA,2013J,141196,600028,52,2
AAA,2013J,141196,600020,53,2
AAA,2013J,141196,600005,55,3
AAA,2013J,141196,600025,55,5
AAA,2013J,141196,600002,60,7
AAA,2013J,141196,600013,60,2
AAA,2013J,141196,600012,70,4
AAA,2013J,141196,600016,70,1
AAA,2013J,141196,600025,72,10
AAA,2013J,141196,600034,72,5
AAA,2013J,141196,600017,85,9
AAA,2013J,141196,600036,85,3
AAA,2013J,141196,600017,103,9
AAA,2013J,141196,600029,103,6
AAA,2013J,141196,600037,103,10
AAA,2013J,141196,600003,104,5
AAA,2013J,141196,600023,104,5
AAA,2013J,141196,600022,107,4
AAA,2013J,141196,600031,109,5
AAA,2013J,141196,600016,113,6
AAA,2013J,141196,600016,118,10
AAA,2013J,141196,600001,128,6
AAA,2013J,141196,600024,128,1
AAA,2013J,141196,600006,132,3
AAA,2013J,141196,600025,132,1
AAA,2013J,141196,600018,137,8
AAA,2013J,141196,600021,137,5
AAA,2013J,141196,600036,137,8
AAA,2013J,141196,600001,144,4
AAA,2013J,141196,600015,144,2
AAA,2013J,141196,600022,157,6
AAA,2013J,141196,600026,157,9
AAA,2013J,141196,600033,157,8
AAA,2013J,141196,600019,162,8
AAA,2013J,141196,600022,162,4
AAA,2013J,141196,600037,162,3
AAA,2013J,141196,600010,171,5
AAA,2013J,141196,600030,171,4
AAA,2013J,141196,600004,181,8
AAA,2013J,141196,600016,181,2
AAA,2013J,141196,600006,197,9
AAA,2013J,141196,600022,202,1
AAA,2013J,141196,600038,202,5
AAA,2013J,141196,600010,207,1
AAA,2013J,141196,600018,214,7
AAA,2013J,141196,600033,214,10
AAA,2013J,141196,600039,214,10
AAA,2013J,141196,600004,221,2
AAA,2013J,141196,600027,221,9
AAA,2013J,141196,600001,229,2
AAA,2013J,141196,600005,234,6
AAA,2013J,141196,600010,234,5
AAA,2013J,141196,600023,235,1
AAA,2013J,141196,600034,235,5
AAA,2013J,141196,600023,237,2
AAA,2013J,141196,600024,237,6
AAA,2013J,141196,600027,237,7
AAA,2013J,141196,600034,249,5
AAA,2013J,141196,600037,249,4
AAA,2013J,141196,600020,250,7
AAA,2013J,141196,600019,253,4
AAA,2013J,141196,600008,256,4
AAA,2013J,142087,600006,-12,5
AAA,2013J,142087,600012,-12,1
AAA,2013J,142087,600032,-12,4
AAA,2013J,142087,600003,-9,9
AAA,2013J,142087,600031,-9,2
AAA,2013J,142087,600024,-3,6
AAA,2013J,142087,600025,-3,8
AAA,2013J,142087,600001,-2,2
AAA,2013J,142087,600013,-2,1
AAA,2013J,142087,600019,2,10
AAA,2013J,142087,600024,2,4
AAA,2013J,142087,600016,3,5
AAA,2013J,142087,600035,3,10
AAA,2013J,142087,600038,3,7
AAA,2013J,142087,600017,11,1
AAA,2013J,142087,600002,17,1
AAA,2013J,142087,600003,17,7
AAA,2013J,142087,600020,17,2
AAA,2013J,142087,600030,19,5
AAA,2013J,142087,600032,19,6
AAA,2013J,142087,600038,33,8
AAA,2013J,142087,600022,46,9
AAA,2013J,142087,600034,46,3
AAA,2013J,142087,600007,56,8
AAA,2013J,142087,600026,56,7
AAA,2013J,142087,600039,56,10
AAA,2013J,142087,600004,77,5
AAA,2013J,142087,600032,77,5
AAA,2013J,142087,600016,81,4
AAA,2013J,142087,600022,81,8
AAA,2013J,142087,600039,81,10
AAA,2013J,142087,600002,94,9
AAA,2013J,142087,600037,94,6
AAA,2013J,142087,600039,94,9
AAA,2013J,142087,600007,96,7
AAA,2013J,142087,600029,96,2
AAA,2013J,142087,600000,101,2
AAA,2013J,142087,600005,101,8
AAA,2013J,142087,600037,101,2
AAA,2013J,142087,600011,111,8
AAA,2013J,142087,600017,111,1
AAA,2013J,142087,600019,114,5
AAA,2013J,142087,600024,114,2
AAA,2013J,142087,600030,114,4
AAA,2013J,142087,600014,128,5
AAA,2013J,142087,600014,128,10
AAA,2013J,142087,600011,132,1
AAA,2013J,142087,600018,132,3
AAA,2013J,142087,600036,132,1
AAA,2013J,142087,600034,167,10
AAA,2013J,142087,600033,173,4
AAA,2013J,142087,600010,175,7
AAA,2013J,142087,600015,175,4
AAA,2013J,142087,600025,175,9
AAA,2013J,142087,600003,178,2
AAA,2013J,142087,600006,178,1
AAA,2013J,142087,600037,178,5
AAA,2013J,142087,600007,179,9
AAA,2013J,142087,600016,180,2
AAA,2013J,142087,600024,180,2
AAA,2013J,142087,600033,180,4
AAA,2013J,142087,600012,192,2
AAA,2013J,142087,600027,192,8
AAA,2013J,142087,600033,192,1
AAA,2013J,142087,600016,203,8
AAA,2013J,142087,600020,203,5
AAA,2013J,142087,600009,210,1
AAA,2013J,142087,600010,215,7
AAA,2013J,142087,600021,215,10
AAA,2013J,142087,600026,215,3
AAA,2013J,142087,600015,223,10
AAA,2013J,142087,600024,224,4
AAA,2013J,142087,600024,224,3
AAA,2013J,142087,600026,224,5
AAA,2013J,142087,600013,227,4
AAA,2013J,142087,600032,227,3
AAA,2013J,142087,600039,228,10
AAA,2013J,142087,600039,228,10
AAA,2013J,142087,600012,230,6
AAA,2013J,142087,600014,230,3
AAA,2013J,142087,600013,232,5
AAA,2013J,142087,600030,244,8
AAA,2013J,142087,600036,247,9
AAA,2013J,142087,600033,259,1
AAA,2013J,142087,600000,260,5
AAA,2013J,142087,600025,260,2
AAA,2013J,142087,600039,260,10
AAA,2013J,173729,600031,-7,2
AAA,2013J,173729,600002,10,2
AAA,2013J,173729,600012,10,4
AAA,2013J,173729,600019,10,2
AAA,2013J,173729,600010,12,1
AAA,2013J,173729,600033,12,8
AAA,2013J,173729,600006,20,5
AAA,2013J,173729,600011,20,1
AAA,2013J,173729,600004,24,5
AAA,2013J,173729,600028,24,3
AAA,2013J,173729,600000,28,7
AAA,2013J,173729,600002,28,5
AAA,2013J,173729,600032,28,8
AAA,2013J,173729,600018,31,8
AAA,2013J,173729,600006,37,10
AAA,2013J,173729,600026,40,7
AAA,2013J,173729,600014,46,2
AAA,2013J,173729,600029,46,3
AAA,2013J,173729,600031,46,1
AAA,2013J,173729,600003,53,7
AAA,2013J,173729,600002,58,5
AAA,2013J,173729,600036,58,4
AAA,2013J,173729,600005,65,2
AAA,2013J,173729,600038,65,9
AAA,2013J,173729,600027,69,4
AAA,2013J,173729,600038,71,3
AAA,2013J,173729,600008,83,7
AAA,2013J,173729,600016,83,2
AAA,2013J,173729,600002,99,8
AAA,2013J,173729,600009,99,2
AAA,2013J,173729,600036,99,5
AAA,2013J,173729,600002,108,3
AAA,2013J,173729,600004,108,10
AAA,2013J,173729,600037,108,9
AAA,2013J,173729,600015,109,6
AAA,2013J,173729,600024,109,10
AAA,2013J,173729,600005,117,2
AAA,2013J,173729,600035,117,10
AAA,2013J,173729,600026,118,9
AAA,2013J,173729,600032,118,4
AAA,2013J,173729,600035,118,1
AAA,2013J,173729,600002,130,1
AAA,2013J,173729,600008,130,8
AAA,2013J,173729,600016,130,3
AAA,2013J,173729,600006,134,10
AAA,2013J,173729,600024,134,10
AAA,2013J,173729,600024,134,3
AAA,2013J,173729,600002,154,8
AAA,2013J,173729,600019,154,7
AAA,2013J,173729,600019,154,1
AAA,2013J,173729,600005,166,8
AAA,2013J,173729,600004,172,8
AAA,2013J,173729,600017,172,10
AAA,2013J,173729,600034,172,8
AAA,2013J,173729,600017,176,8
AAA,2013J,173729,600008,178,8
AAA,2013J,173729,600022,181,8
AAA,2013J,173729,600031,181,7
AAA,2013J,173729,600007,182,2
AAA,2013J,173729,600012,182,7
AAA,2013J,173729,600017,182,4
AAA,2013J,173729,600014,184,10
AAA,2013J,173729,600001,193,2
AAA,2013J,173729,600010,194,1
AAA,2013J,173729,600019,195,7
AAA,2013J,173729,600001,202,8
AAA,2013J,173729,600038,202,10
AAA,2013J,173729,600003,204,4
AAA,2013J,173729,600006,204,2
AAA,2013J,173729,600015,204,1
AAA,2013J,173729,600017,211,9
AAA,2013J,173729,600030,211,8
AAA,2013J,173729,600031,211,9
AAA,2013J,173729,600010,214,3
AAA,2013J,173729,600026,214,9
AAA,2013J,173729,600000,227,10
AAA,2013J,173729,600025,229,4
AAA,2013J,173729,600020,232,7
AAA,2013J,173729,600001,237,10
AAA,2013J,173729,600002,256,7
AAA,2013J,173729,600012,256,7
AAA,2013J,173729,600038,256,6
AAA,2013J,205055,600010,-11,1
AAA,2013J,205055,600031,-11,2
AAA,2013J,205055,600012,-7,4
AAA,2013J,205055,600019,-3,9
AAA,2013J,205055,600036,-1,4
AAA,2013J,205055,600007,5,2
AAA,2013J,205055,600017,5,2
AAA,2013J,205055,600019,6,5
AAA,2013J,205055,600023,6,4
AAA,2013J,205055,600026,6,2
AAA,2013J,205055,600033,14,10
AAA,2013J,205055,600026,16,7
AAA,2013J,205055,600018,23,10
AAA,2013J,205055,600000,25,2
AAA,2013J,205055,600004,25,1
AAA,2013J,205055,600025,25,7
AAA,2013J,205055,600021,27,8
AAA,2013J,205055,600037,27,9
AAA,2013J,205055,600001,30,4
AAA,2013J,205055,600006,30,10
AAA,2013J,205055,600029,30,1
AAA,2013J,205055,600007,33,3
AAA,2013J,205055,600010,33,5
AAA,2013J,205055,600027,33,9
AAA,2013J,205055,600018,35,6
AAA,2013J,205055,600002,39,5
AAA,2013J,205055,600006,40,5
AAA,2013J,205055,600010,40,9
AAA,2013J,205055,600022,40,3
AAA,2013J,205055,600005,44,7
AAA,2013J,205055,600007,44,9
AAA,2013J,205055,600019,44,3
AAA,2013J,205055,600020,55,8
AAA,2013J,205055,600000,76,8
AAA,2013J,205055,600009,76,4
AAA,2013J,205055,600037,76,4
AAA,2013J,205055,600028,78,3
AAA,2013J,205055,600029,78,3
AAA,2013J,205055,600036,78,3
AAA,2013J,205055,600017,82,9
AAA,2013J,205055,600027,82,7
AAA,2013J,205055,600036,82,4
AAA,2013J,205055,600007,97,4
AAA,2013J,205055,600019,97,2
AAA,2013J,205055,600027,97,2
AAA,2013J,205055,600036,102,5
AAA,2013J,205055,600002,104,8
AAA,2013J,205055,600013,104,3
AAA,2013J,205055,600015,104,3
AAA,2013J,205055,600001,115,6
AAA,2013J,205055,600037,115,7
AAA,2013J,205055,600037,116,4
AAA,2013J,205055,600022,124,5
AAA,2013J,205055,600001,134,6
AAA,2013J,205055,600003,134,10
AAA,2013J,205055,600007,140,10
AAA,2013J,205055,600018,140,9
AAA,2013J,205055,600021,140,5
AAA,2013J,205055,600004,142,7
AAA,2013J,205055,600021,142,4
AAA,2013J,205055,600023,142,1
AAA,2013J,205055,600015,145,8
AAA,2013J,205055,600020,145,10
AAA,2013J,205055,600014,150,8
AAA,2013J,205055,600027,150,3
AAA,2013J,205055,600016,151,2
AAA,2013J,205055,600021,151,7
AAA,2013J,205055,600024,151,5
AAA,2013J,205055,600004,153,9
AAA,2013J,205055,600026,153,2
AAA,2013J,205055,600033,153,4
AAA,2013J,205055,600029,160,1
AAA,2013J,205055,600037,160,10
AAA,2013J,205055,600002,163,3
AAA,2013J,205055,600004,163,7
AAA,2013J,205055,600014,171,9
AAA,2013J,205055,600037,171,9
AAA,2013J,205055,600007,172,7
AAA,2013J,205055,600005,173,4
AAA,2013J,205055,600022,173,6
AAA,2013J,205055,600017,182,10
AAA,2013J,205055,600032,191,1
AAA,2013J,205055,600031,193,9
AAA,2013J,205055,600038,193,2
AAA,2013J,205055,600013,195,8
AAA,2013J,205055,600024,195,2
AAA,2013J,205055,600039,195,7
AAA,2013J,205055,600011,199,4
AAA,2013J,205055,600014,205,5
AAA,2013J,205055,600017,205,1
AAA,2013J,205055,600031,205,1
AAA,2013J,205055,600000,207,8
AAA,2013J,205055,600007,207,7
AAA,2013J,205055,600034,207,9
AAA,2013J,205055,600000,214,6
AAA,2013J,205055,600017,214,3
AAA,2013J,205055,600008,221,10
AAA,2013J,205055,600008,221,5
AAA,2013J,205055,600033,229,8
AAA,2013J,205055,600005,237,6
AAA,2013J,205055,600018,238,4
AAA,2013J,205055,600015,242,2
AAA,2013J,205055,600026,242,1
AAA,2013J,205055,600038,242,1
AAA,2013J,205055,600008,243,2
AAA,2013J,205055,600007,244,4
AAA,2013J,205055,600011,244,7
AAA,2013J,205055,600019,244,4
AAA,2013J,205055,600002,250,7
AAA,2013J,205055,600030,250,3
AAA,2013J,205055,600038,263,3
AAA,2013J,234582,600019,-14,2
AAA,2013J,234582,600035,-14,4
AAA,2013J,234582,600004,-13,7
AAA,2013J,234582,600025,-13,6
AAA,2013J,234582,600034,-13,10
AAA,2013J,234582,600021,-11,9
AAA,2013J,234582,600016,-6,2
AAA,2013J,234582,600036,-6,10
AAA,2013J,234582,600007,-5,4
AAA,2013J,234582,600021,-5,5
AAA,2013J,234582,600029,-5,9
AAA,2013J,234582,600014,1,2
AAA,2013J,234582,600024,1,7
AAA,2013J,234582,600030,1,2
AAA,2013J,234582,600010,9,4
AAA,2013J,234582,600010,9,1
AAA,2013J,234582,600023,9,3
AAA,2013J,234582,600016,13,8
AAA,2013J,234582,600023,13,1
AAA,2013J,234582,600034,13,3
AAA,2013J,234582,600020,22,2
AAA,2013J,234582,600023,22,1
AAA,2013J,234582,600001,30,1
AAA,2013J,234582,600015,30,7
AAA,2013J,234582,600035,30,9
AAA,2013J,234582,600030,60,2
AAA,2013J,234582,600009,61,4
AAA,2013J,234582,600014,61,3
AAA,2013J,234582,600030,61,4
AAA,2013J,234582,600015,77,10
AAA,2013J,234582,600015,77,2
AAA,2013J,234582,600019,77,6
AAA,2013J,234582,600004,92,5
AAA,2013J,234582,600007,92,6
AAA,2013J,234582,600021,94,9
AAA,2013J,234582,600033,94,4
AAA,2013J,234582,600020,100,9
AAA,2013J,234582,600012,104,5
AAA,2013J,234582,600028,104,6
AAA,2013J,234582,600015,105,8
AAA,2013J,234582,600019,105,3
AAA,2013J,234582,600033,115,1
AAA,2013J,234582,600016,118,10
AAA,2013J,234582,600028,118,6
AAA,2013J,234582,600034,118,8
AAA,2013J,234582,600033,120,8
AAA,2013J,234582,600034,120,2
AAA,2013J,234582,600025,123,4
AAA,2013J,234582,600032,123,1
AAA,2013J,234582,600021,138,6
AAA,2013J,234582,600015,140,5
AAA,2013J,234582,600001,150,10
AAA,2013J,234582,600016,150,5
AAA,2013J,234582,600006,151,4
AAA,2013J,234582,600026,151,8
AAA,2013J,234582,600031,151,2
AAA,2013J,234582,600009,152,3
AAA,2013J,234582,600025,157,1
AAA,2013J,234582,600009,162,9
AAA,2013J,234582,600003,163,2
AAA,2013J,234582,600029,163,3
AAA,2013J,234582,600034,163,7
AAA,2013J,234582,600003,164,1
AAA,2013J,234582,600006,166,5
AAA,2013J,234582,600013,166,10
AAA,2013J,234582,600017,166,1
AAA,2013J,234582,600000,169,4
AAA,2013J,234582,600023,169,3
AAA,2013J,234582,600011,195,8
AAA,2013J,234582,600012,195,3
AAA,2013J,234582,600026,195,2
AAA,2013J,234582,600001,200,6
AAA,2013J,234582,600018,200,6
AAA,2013J,234582,600039,200,3
AAA,2013J,234582,600013,205,7
AAA,2013J,234582,600031,205,1
AAA,2013J,234582,600039,205,4
AAA,2013J,234582,600006,211,9
AAA,2013J,234582,600012,211,7
AAA,2013J,234582,600017,211,9
AAA,2013J,234582,600024,217,5
AAA,2013J,234582,600026,217,5
AAA,2013J,234582,600033,229,5
AAA,2013J,234582,600024,233,10
AAA,2013J,234582,600035,233,8
AAA,2013J,234582,600017,243,6
AAA,2013J,234582,600028,243,3
AAA,2013J,234582,600032,243,9
AAA,2013J,234582,600036,265,6
AAA,2013J,234582,600003,267,3
AAA,2013J,244080,600034,-9,2
AAA,2013J,244080,600035,-9,3
AAA,2013J,244080,600006,-4,9
AAA,2013J,244080,600008,-4,5
AAA,2013J,244080,600039,-4,6
AAA,2013J,244080,600005,4,2
AAA,2013J,244080,600008,4,9
AAA,2013J,244080,600002,6,10
AAA,2013J,244080,600009,6,10
AAA,2013J,244080,600020,6,2
AAA,2013J,244080,600014,26,5
AAA,2013J,244080,600015,26,3
AAA,2013J,244080,600033,26,6
AAA,2013J,244080,600014,41,1
AAA,2013J,244080,600021,41,5
AAA,2013J,244080,600029,41,7
AAA,2013J,244080,600023,57,5
AAA,2013J,244080,600011,60,4
AAA,2013J,244080,600036,60,9
AAA,2013J,244080,600037,60,9
AAA,2013J,244080,600004,63,10
AAA,2013J,244080,600008,63,7
AAA,2013J,244080,600002,74,6
AAA,2013J,244080,600017,74,5
AAA,2013J,244080,600010,76,1
AAA,2013J,244080,600008,82,4
AAA,2013J,244080,600038,82,8
AAA,2013J,244080,600003,90,5
AAA,2013J,244080,600033,90,8
AAA,2013J,244080,600005,91,9
AAA,2013J,244080,600032,92,5
AAA,2013J,244080,600036,92,2
AAA,2013J,244080,600017,94,3
AAA,2013J,244080,600020,94,7
AAA,2013J,244080,600012,102,5
AAA,2013J,244080,600028,102,10
AAA,2013J,244080,600031,102,9
AAA,2013J,244080,600008,106,10
AAA,2013J,244080,600006,116,8
AAA,2013J,244080,600037,116,3
AAA,2013J,244080,600038,116,1
AAA,2013J,244080,600000,117,8
AAA,2013J,244080,600007,127,6
AAA,2013J,244080,600020,127,2
AAA,2013J,244080,600015,128,5
AAA,2013J,244080,600019,128,2
AAA,2013J,244080,600032,129,2
AAA,2013J,244080,600003,136,3
AAA,2013J,244080,600003,136,2
AAA,2013J,244080,600004,136,5
AAA,2013J,244080,600007,138,4
AAA,2013J,244080,600013,138,7
AAA,2013J,244080,600013,138,10
AAA,2013J,244080,600029,145,2
AAA,2013J,244080,600031,157,8
AAA,2013J,244080,600013,158,9
AAA,2013J,244080,600017,163,10
AAA,2013J,244080,600019,163,7
AAA,2013J,244080,600004,164,8
AAA,2013J,244080,600022,164,6
AAA,2013J,244080,600027,169,4
AAA,2013J,244080,600027,169,5
AAA,2013J,244080,600038,169,7
AAA,2013J,244080,600011,184,1
AAA,2013J,244080,600030,184,7
AAA,2013J,244080,600013,187,2
AAA,2013J,244080,600009,212,4
AAA,2013J,244080,600015,212,6
AAA,2013J,244080,600020,212,7
AAA,2013J,244080,600023,222,10
AAA,2013J,244080,600036,224,9
AAA,2013J,244080,600007,233,1
AAA,2013J,244080,600027,233,2
AAA,2013J,244080,600037,233,2
AAA,2013J,244080,600017,242,5
AAA,2013J,244080,600017,242,7
AAA,2013J,244080,600033,242,10
AAA,2013J,244080,600026,246,2
AAA,2013J,244080,600025,247,4
AAA,2013J,244080,600037,247,10
AAA,2013J,244080,600028,253,1
AAA,2013J,297233,600005,-4,8
AAA,2013J,297233,600004,2,4
AAA,2013J,297233,600012,2,10
AAA,2013J,297233,600037,5,5
AAA,2013J,297233,600038,5,3
AAA,2013J,297233,600027,16,8
AAA,2013J,297233,600017,19,5
AAA,2013J,297233,600034,19,4
AAA,2013J,297233,600016,22,1
AAA,2013J,297233,600019,26,5
AAA,2013J,297233,600007,47,7
AAA,2013J,297233,600008,47,3
AAA,2013J,297233,600020,47,6
AAA,2013J,297233,600012,59,10
AAA,2013J,297233,600032,60,8
AAA,2013J,297233,600030,62,6
AAA,2013J,297233,600034,70,1
AAA,2013J,297233,600011,74,4
AAA,2013J,297233,600022,74,7
AAA,2013J,297233,600027,74,6
AAA,2013J,297233,600012,75,8
AAA,2013J,297233,600024,75,8
AAA,2013J,297233,600029,75,4
AAA,2013J,297233,600001,81,3
AAA,2013J,297233,600038,81,1
AAA,2013J,297233,600001,111,9
AAA,2013J,297233,600001,114,1
AAA,2013J,297233,600025,118,3
AAA,2013J,297233,600033,118,5
AAA,2013J,297233,600006,121,4
AAA,2013J,297233,600008,121,7
AAA,2013J,297233,600002,126,2
AAA,2013J,297233,600010,126,4
AAA,2013J,297233,600034,126,4
AAA,2013J,297233,600017,129,5
AAA,2013J,297233,600020,129,7
AAA,2013J,297233,600034,129,8
AAA,2013J,297233,600005,130,2
AAA,2013J,297233,600034,130,9
AAA,2013J,297233,600012,131,8
AAA,2013J,297233,600000,134,1
AAA,2013J,297233,600005,134,7
AAA,2013J,297233,600032,143,6
AAA,2013J,297233,600012,152,8
AAA,2013J,297233,600027,152,3
AAA,2013J,297233,600028,152,5
AAA,2013J,297233,600013,156,9
AAA,2013J,297233,600023,156,10
AAA,2013J,297233,600025,156,5
AAA,2013J,297233,600003,157,2
AAA,2013J,297233,600032,157,3
AAA,2013J,297233,600014,170,4
AAA,2013J,297233,600020,170,10
AAA,2013J,297233,600029,170,10
AAA,2013J,297233,600012,172,8
AAA,2013J,297233,600014,174,8
AAA,2013J,297233,600020,174,8
AAA,2013J,297233,600031,174,2
AAA,2013J,297233,600000,175,5
AAA,2013J,297233,600036,178,8
AAA,2013J,297233,600014,181,3
AAA,2013J,297233,600028,181,4
AAA,2013J,297233,600035,181,3
AAA,2013J,297233,600005,194,4
AAA,2013J,297233,600009,199,6
AAA,2013J,297233,600022,199,6
AAA,2013J,297233,600011,202,1
AAA,2013J,297233,600023,202,3
AAA,2013J,297233,600016,204,2
AAA,2013J,297233,600007,205,2
AAA,2013J,297233,600017,205,8
AAA,2013J,297233,600000,207,1
AAA,2013J,297233,600012,207,2
AAA,2013J,297233,600033,207,2
AAA,2013J,297233,600002,208,2
AAA,2013J,297233,600017,208,8
AAA,2013J,297233,600021,209,1
AAA,2013J,297233,600027,209,3
AAA,2013J,297233,600028,209,9
AAA,2013J,297233,600027,210,3
AAA,2013J,297233,600023,215,10
AAA,2013J,297233,600015,223,10
AAA,2013J,297233,600016,223,7
AAA,2013J,297233,600026,223,6
AAA,2013J,297233,600031,228,8
AAA,2013J,297233,600014,230,6
AAA,2013J,297233,600031,230,9
AAA,2013J,297233,600017,233,2
AAA,2013J,297233,600025,233,8
AAA,2013J,297233,600029,236,6
AAA,2013J,297233,600027,245,7
AAA,2013J,297233,600020,257,1
AAA,2013J,297233,600038,257,3
AAA,2013J,297233,600006,260,2
AAA,2013J,297233,600015,260,8
AAA,2013J,297233,600031,260,5
AAA,2013J,297233,600018,261,1
AAA,2013J,297233,600033,261,8
AAA,2013J,297849,600004,-14,3
AAA,2013J,297849,600004,-14,2
AAA,2013J,297849,600020,-14,4
AAA,2013J,297849,600008,-12,7
AAA,2013J,297849,600010,-12,10
AAA,2013J,297849,600034,-12,6
AAA,2013J,297849,600008,-10,4
AAA,2013J,297849,600015,-10,7
AAA,2013J,297849,600014,-8,4
AAA,2013J,297849,600034,-8,6
AAA,2013J,297849,600030,-7,5
AAA,2013J,297849,600008,-3,1
AAA,2013J,297849,600022,-3,4
AAA,2013J,297849,600026,-3,3
AAA,2013J,297849,600011,7,5
AAA,2013J,297849,600018,7,10
AAA,2013J,297849,600024,7,1
AAA,2013J,297849,600004,29,8
AAA,2013J,297849,600006,32,6
AAA,2013J,297849,600032,32,1
AAA,2013J,297849,600022,42,1
AAA,2013J,297849,600022,42,3
AAA,2013J,297849,600005,48,7
AAA,2013J,297849,600005,48,9
AAA,2013J,297849,600007,51,1
AAA,2013J,297849,600020,54,3
AAA,2013J,297849,600020,57,8
AAA,2013J,297849,600004,63,7
AAA,2013J,297849,600008,63,7
AAA,2013J,297849,600021,64,1
AAA,2013J,297849,600026,71,3
AAA,2013J,297849,600002,74,4
AAA,2013J,297849,600008,78,10
AAA,2013J,297849,600031,78,10
AAA,2013J,297849,600011,87,10
AAA,2013J,297849,600020,87,8
AAA,2013J,297849,600011,92,6
AAA,2013J,297849,600017,95,4
AAA,2013J,297849,600000,103,8
AAA,2013J,297849,600022,103,6
AAA,2013J,297849,600026,103,9
AAA,2013J,297849,600001,117,9
AAA,2013J,297849,600032,117,9
AAA,2013J,297849,600037,117,6
AAA,2013J,297849,600015,133,7
AAA,2013J,297849,600008,137,5
AAA,2013J,297849,600020,137,3
AAA,2013J,297849,600006,141,3
AAA,2013J,297849,600039,141,3
AAA,2013J,297849,600015,150,1
AAA,2013J,297849,600026,150,1
AAA,2013J,297849,600008,157,8
AAA,2013J,297849,600029,157,5
AAA,2013J,297849,600017,159,1
AAA,2013J,297849,600028,159,6
AAA,2013J,297849,600028,167,9
AAA,2013J,297849,600034,167,2
AAA,2013J,297849,600009,186,10
AAA,2013J,297849,600034,186,10
AAA,2013J,297849,600009,187,4
AAA,2013J,297849,600037,187,9
AAA,2013J,297849,600008,189,7
AAA,2013J,297849,600012,189,3
AAA,2013J,297849,600035,189,9
AAA,2013J,297849,600015,195,8
AAA,2013J,297849,600021,195,2
AAA,2013J,297849,600023,196,3
AAA,2013J,297849,600005,198,8
AAA,2013J,297849,600019,198,4
AAA,2013J,297849,600039,198,3
AAA,2013J,297849,600006,201,7
AAA,2013J,297849,600022,201,10
AAA,2013J,297849,600004,209,1
AAA,2013J,297849,600014,209,6
AAA,2013J,297849,600018,209,2
AAA,2013J,297849,600001,215,1
AAA,2013J,297849,600004,237,4
AAA,2013J,297849,600029,237,8
AAA,2013J,297849,600035,237,1
AAA,2013J,297849,600025,240,1
AAA,2013J,297849,600032,240,1
AAA,2013J,297849,600005,251,6
AAA,2013J,297849,600010,251,2
AAA,2013J,297849,600011,251,3
AAA,2013J,297849,600004,256,1
AAA,2013J,297849,600031,259,9
AAA,2013J,297849,600034,259,6
AAA,2013J,298879,600013,2,8
AAA,2013J,298879,600030,2,6
AAA,2013J,298879,600007,9,10
AAA,2013J,298879,600032,9,3
AAA,2013J,298879,600038,12,7
AAA,2013J,298879,600023,22,8
AAA,2013J,298879,600001,23,3
AAA,2013J,298879,600029,23,9
AAA,2013J,298879,600000,28,10
AAA,2013J,298879,600013,32,4
AAA,2013J,298879,600012,33,1
AAA,2013J,298879,600028,33,8
AAA,2013J,298879,600008,35,8
AAA,2013J,298879,600009,35,5
AAA,2013J,298879,600002,40,3
AAA,2013J,298879,600007,40,5
AAA,2013J,298879,600019,40,5
AAA,2013J,319092,600008,-4,5
AAA,2013J,319092,600012,-4,2
AAA,2013J,319092,600035,-4,1
AAA,2013J,319092,600007,0,8
AAA,2013J,319092,600017,0,9
AAA,2013J,319092,600022,0,7
AAA,2013J,319092,600011,14,2
AAA,2013J,319092,600020,14,3
AAA,2013J,319092,600029,14,9
AAA,2013J,319092,600014,24,8
AAA,2013J,319092,600022,24,5
AAA,2013J,319092,600035,24,3
AAA,2013J,319092,600002,39,10
AAA,2013J,319092,600007,39,1
AAA,2013J,319092,600001,51,10
AAA,2013J,319092,600003,51,3
AAA,2013J,319092,600032,51,10
AAA,2013J,319092,600007,54,7
AAA,2013J,319092,600013,54,4
AAA,2013J,319092,600033,54,7
AAA,2013J,319092,600004,62,3
AAA,2013J,319092,600016,62,7
AAA,2013J,319092,600027,62,3
AAA,2013J,319092,600002,67,4
AAA,2013J,319092,600021,68,8
AAA,2013J,319092,600000,85,6
AAA,2013J,319092,600024,85,1
AAA,2013J,319092,600030,85,6
AAA,2013J,319092,600004,90,1
AAA,2013J,319092,600013,90,7
AAA,2013J,319092,600039,90,9
AAA,2013J,319092,600013,94,4
AAA,2013J,319092,600032,94,10
AAA,2013J,319092,600010,95,8
AAA,2013J,319092,600026,95,6
AAA,2013J,319092,600035,95,5
AAA,2013J,319092,600029,97,8
AAA,2013J,319092,600031,97,4
AAA,2013J,319092,600021,98,5
AAA,2013J,319092,600037,98,4
AAA,2013J,319092,600018,100,9
AAA,2013J,319092,600023,100,9
AAA,2013J,319092,600008,127,7
AAA,2013J,319092,600014,127,4
AAA,2013J,319092,600032,127,6
AAA,2013J,319092,600026,144,3
AAA,2013J,319092,600002,145,3
AAA,2013J,319092,600001,160,5
AAA,2013J,319092,600015,160,5
AAA,2013J,319092,600028,160,8
AAA,2013J,319092,600030,163,6
AAA,2013J,319092,600011,180,5
AAA,2013J,319092,600030,180,7
AAA,2013J,319092,600004,181,4
AAA,2013J,319092,600005,181,5
AAA,2013J,319092,600022,183,8
AAA,2013J,319092,600037,183,3
AAA,2013J,319092,600006,185,1
AAA,2013J,319092,600031,185,8
AAA,2013J,319092,600033,185,9
AAA,2013J,319092,600000,196,1
AAA,2013J,319092,600016,196,2
AAA,2013J,319092,600038,196,4
AAA,2013J,319092,600011,197,4
AAA,2013J,319092,600028,197,9
AAA,2013J,319092,600030,205,10
AAA,2013J,319092,600030,214,3
AAA,2013J,319092,600030,215,8
AAA,2013J,319092,600009,216,3
AAA,2013J,319092,600006,218,6
AAA,2013J,319092,600029,218,6
AAA,2013J,319092,600037,218,4
AAA,2013J,319092,600002,222,7
AAA,2013J,319092,600028,222,8
AAA,2013J,319092,600014,230,5
AAA,2013J,319092,600027,230,8
AAA,2013J,319092,600000,231,2
AAA,2013J,319092,600031,231,10
AAA,2013J,319092,600037,231,2
AAA,2013J,319092,600011,237,4
AAA,2013J,319092,600021,237,5
AAA,2013J,319092,600029,237,8
AAA,2013J,319092,600005,238,10
AAA,2013J,319092,600027,238,7
AAA,2013J,319092,600029,240,1
AAA,2013J,319092,600034,240,7
AAA,2013J,319092,600039,241,9
AAA,2013J,319092,600002,245,4
AAA,2013J,319092,600017,245,5
AAA,2013J,319092,600031,245,5
AAA,2013J,319092,600014,246,9
AAA,2013J,319092,600017,246,6
AAA,2013J,319092,600038,246,3
AAA,2013J,319092,600024,255,4
AAA,2013J,319092,600031,255,4
AAA,2013J,319092,600004,261,7
AAA,2013J,319092,600007,261,1
AAA,2013J,319092,600018,263,9
AAA,2013J,319092,600037,263,6
AAA,2013J,319092,600006,266,4
AAA,2013J,319092,600015,266,1
AAA,2013J,319092,600039,266,4
AAA,2013J,389217,600018,-9,2
AAA,2013J,389217,600006,-3,5
AAA,2013J,389217,600010,-3,7
AAA,2013J,389217,600003,1,5
AAA,2013J,389217,600008,1,5
AAA,2013J,389217,600020,10,2
AAA,2013J,389217,600026,10,7
AAA,2013J,389217,600032,10,2
AAA,2013J,389217,600002,11,8
AAA,2013J,389217,600006,11,10
AAA,2013J,389217,600002,45,3
AAA,2013J,389217,600004,45,8
AAA,2013J,389217,600023,45,10
AAA,2013J,389217,600031,47,10
AAA,2013J,389217,600017,49,1
AAA,2013J,389217,600025,49,9
AAA,2013J,389217,600031,49,3
AAA,2013J,389217,600037,56,5
AAA,2013J,389217,600014,65,9
AAA,2013J,389217,600029,65,3
AAA,2013J,389217,600013,66,8
AAA,2013J,389217,600001,67,10
AAA,2013J,389217,600002,67,8
AAA,2013J,389217,600006,67,4
AAA,2013J,389217,600019,74,1
AAA,2013J,389217,600037,76,8
AAA,2013J,389217,600016,77,8
AAA,2013J,389217,600024,87,9
AAA,2013J,389217,600017,104,9
AAA,2013J,389217,600034,104,5
AAA,2013J,389217,600002,107,6
AAA,2013J,389217,600008,107,10
AAA,2013J,389217,600035,107,6
AAA,2013J,389217,600018,112,1
AAA,2013J,389217,600028,112,3
AAA,2013J,389217,600035,112,6
AAA,2013J,389217,600010,114,6
AAA,2013J,389217,600031,114,2
AAA,2013J,389217,600034,125,7
AAA,2013J,389217,600039,134,10
AAA,2013J,389217,600023,143,4
AAA,2013J,389217,600004,148,3
AAA,2013J,389217,600037,153,6
AAA,2013J,389217,600014,166,3
AAA,2013J,389217,600000,173,10
AAA,2013J,389217,600025,173,3
AAA,2013J,389217,600029,175,10
AAA,2013J,389217,600032,175,6
AAA,2013J,389217,600018,179,7
AAA,2013J,389217,600007,191,9
AAA,2013J,389217,600012,191,8
AAA,2013J,389217,600009,193,9
AAA,2013J,389217,600011,196,3
AAA,2013J,389217,600037,196,1
AAA,2013J,389217,600031,204,2
AAA,2013J,389217,600026,205,9
AAA,2013J,389217,600002,208,6
AAA,2013J,389217,600002,208,1
AAA,2013J,389217,600030,208,10
AAA,2013J,389217,600019,214,8
AAA,2013J,389217,600026,214,9
AAA,2013J,389217,600034,214,9
AAA,2013J,389217,600001,224,10
AAA,2013J,389217,600027,224,2
AAA,2013J,389217,600033,224,5
AAA,2013J,389217,600009,226,2
AAA,2013J,389217,600038,226,10
AAA,2013J,389217,600017,228,8
AAA,2013J,389217,600034,232,1
AAA,2013J,389217,600003,240,6
AAA,2013J,389217,600019,240,6
AAA,2013J,389217,600029,240,7
AAA,2013J,389217,600007,248,3
AAA,2013J,389217,600032,248,9
AAA,2013J,389217,600036,249,10
AAA,2013J,389217,600005,250,2
AAA,2013J,389217,600008,250,10
AAA,2013J,389217,600030,250,2
AAA,2013J,389217,600020,263,10
AAA,2013J,389217,600033,263,3
AAA,2013J,389217,600007,265,2
AAA,2013J,389217,600031,265,2
AAA,2013J,403868,600025,-9,5
AAA,2013J,403868,600022,-5,7
AAA,2013J,403868,600001,-3,1
AAA,2013J,403868,600015,-3,3
AAA,2013J,403868,600016,-3,5
AAA,2013J,403868,600025,-1,8
AAA,2013J,403868,600010,8,6
AAA,2013J,403868,600035,8,1
AAA,2013J,403868,600021,12,7
AAA,2013J,403868,600025,12,10
AAA,2013J,403868,600026,12,10
AAA,2013J,403868,600018,21,4
AAA,2013J,403868,600019,29,8
AAA,2013J,403868,600031,43,3
AAA,2013J,403868,600000,53,6
AAA,2013J,403868,600021,53,8
AAA,2013J,403868,600036,53,1
AAA,2013J,403868,600026,57,1
AAA,2013J,403868,600037,57,3
AAA,2013J,403868,600006,61,2
AAA,2013J,403868,600017,61,3
AAA,2013J,403868,600025,72,8
AAA,2013J,403868,600029,72,5
AAA,2013J,403868,600036,72,6
AAA,2013J,403868,600010,74,5
AAA,2013J,403868,600022,74,10
AAA,2013J,403868,600009,85,8
AAA,2013J,403868,600029,85,6
AAA,2013J,403868,600031,85,2
AAA,2013J,403868,600013,86,6
AAA,2013J,403868,600024,86,9
AAA,2013J,403868,600024,95,4
AAA,2013J,403868,600026,97,1
AAA,2013J,403868,600015,103,4
AAA,2013J,403868,600022,103,10
AAA,2013J,403868,600028,103,10
AAA,2013J,403868,600028,108,6
AAA,2013J,403868,600014,109,6
AAA,2013J,403868,600006,110,6
AAA,2013J,403868,600010,111,4
AAA,2013J,403868,600039,111,2
AAA,2013J,403868,600006,115,4
AAA,2013J,403868,600029,115,4
AAA,2013J,403868,600005,118,5
AAA,2013J,403868,600005,118,5
AAA,2013J,403868,600024,125,9
AAA,2013J,403868,600031,125,2
AAA,2013J,403868,600039,125,1
AAA,2013J,403868,600001,126,7
AAA,2013J,403868,600007,126,2
AAA,2013J,403868,600032,126,1
AAA,2013J,403868,600012,130,9
AAA,2013J,403868,600033,130,1
AAA,2013J,403868,600008,151,4
AAA,2013J,403868,600018,151,2
AAA,2013J,403868,600031,156,8
AAA,2013J,403868,600031,156,8
AAA,2013J,403868,600007,157,3
AAA,2013J,403868,600019,157,6
AAA,2013J,403868,600013,158,3
AAA,2013J,403868,600031,158,7
AAA,2013J,403868,600032,158,2
AAA,2013J,403868,600007,163,4
AAA,2013J,403868,600012,163,6
AAA,2013J,403868,600007,174,4
AAA,2013J,403868,600010,174,6
AAA,2013J,403868,600031,176,1
AAA,2013J,403868,600009,178,7
AAA,2013J,403868,600012,178,8
AAA,2013J,403868,600021,178,6
AAA,2013J,403868,600026,186,7
AAA,2013J,403868,600030,188,5
AAA,2013J,403868,600014,206,7
AAA,2013J,403868,600029,210,7
AAA,2013J,403868,600031,210,7
AAA,2013J,403868,600035,210,3
AAA,2013J,403868,600006,224,8
AAA,2013J,403868,600021,224,3
AAA,2013J,403868,600004,229,7
AAA,2013J,403868,600024,229,10
AAA,2013J,403868,600029,229,5
AAA,2013J,403868,600033,240,9
AAA,2013J,403868,600037,240,8
AAA,2013J,403868,600003,247,5
AAA,2013J,403868,600019,247,3
AAA,2013J,403868,600003,253,3
AAA,2013J,403868,600000,263,5
AAA,2013J,469748,600001,-14,9
AAA,2013J,469748,600007,-14,5
AAA,2013J,469748,600014,-14,4
AAA,2013J,469748,600013,-7,5
AAA,2013J,469748,600022,-7,6
AAA,2013J,469748,600008,-1,9
AAA,2013J,469748,600028,1,3
AAA,2013J,469748,600006,3,1
AAA,2013J,469748,600029,3,3
AAA,2013J,469748,600038,3,3
AAA,2013J,469748,600003,6,6
AAA,2013J,469748,600010,10,7
AAA,2013J,469748,600019,10,7
AAA,2013J,469748,600024,10,8
AAA,2013J,469748,600010,13,5
AAA,2013J,469748,600033,13,9
AAA,2013J,469748,600039,13,6
AAA,2013J,469748,600004,23,1
AAA,2013J,469748,600007,23,2
AAA,2013J,469748,600030,23,7
AAA,2013J,469748,600019,31,4
AAA,2013J,469748,600014,38,1
AAA,2013J,469748,600028,38,4
AAA,2013J,469748,600003,51,5
AAA,2013J,469748,600012,51,7
AAA,2013J,469748,600033,51,6
AAA,2013J,469748,600034,52,9
AAA,2013J,469748,600009,62,5
AAA,2013J,469748,600017,62,7
AAA,2013J,469748,600015,82,1
AAA,2013J,469748,600018,82,7
AAA,2013J,469748,600019,91,7
AAA,2013J,469748,600028,91,2
AAA,2013J,469748,600028,103,5
AAA,2013J,469748,600033,103,8
AAA,2013J,469748,600039,103,2
AAA,2013J,469748,600024,105,4
AAA,2013J,469748,600034,105,4
AAA,2013J,469748,600010,107,8
AAA,2013J,469748,600014,107,5
AAA,2013J,469748,600020,107,5
AAA,2013J,469748,600003,119,4
AAA,2013J,469748,600026,119,10
AAA,2013J,469748,600028,119,7
AAA,2013J,469748,600001,121,1
AAA,2013J,469748,600005,121,2
AAA,2013J,469748,600039,121,2
AAA,2013J,469748,600017,123,1
AAA,2013J,469748,600010,130,7
AAA,2013J,469748,600018,130,2
AAA,2013J,469748,600029,132,2
AAA,2013J,469748,600004,156,4
AAA,2013J,469748,600034,156,3
AAA,2013J,469748,600039,161,2
AAA,2013J,469748,600021,164,3
AAA,2013J,469748,600032,164,9
AAA,2013J,469748,600003,182,6
AAA,2013J,469748,600037,182,6
AAA,2013J,469748,600016,191,2
AAA,2013J,469748,600022,191,9
AAA,2013J,469748,600031,191,3
AAA,2013J,469748,600022,200,4
AAA,2013J,469748,600027,203,6
AAA,2013J,469748,600035,203,5
AAA,2013J,469748,600003,207,8
AAA,2013J,469748,600021,207,3
AAA,2013J,469748,600037,207,3
AAA,2013J,469748,600016,220,8
AAA,2013J,469748,600035,220,4
AAA,2013J,469748,600007,223,6
AAA,2013J,469748,600020,223,2
AAA,2013J,469748,600028,223,8
AAA,2013J,469748,600012,234,3
AAA,2013J,469748,600021,234,10
AAA,2013J,469748,600006,235,3
AAA,2013J,469748,600008,235,2
AAA,2013J,469748,600036,235,2
AAA,2013J,469748,600007,244,8
AAA,2013J,469748,600030,247,4
AAA,2013J,469748,600035,247,8
AAA,2013J,469748,600039,247,1
AAA,2013J,469748,600001,248,1
AAA,2013J,469748,600007,248,8
AAA,2013J,469748,600008,248,4
AAA,2013J,469748,600017,264,5
AAA,2013J,502585,600003,-14,5
AAA,2013J,502585,600021,-14,4
AAA,2013J,502585,600021,-14,3
AAA,2013J,502585,600030,-7,2
AAA,2013J,502585,600026,1,6
AAA,2013J,502585,600016,3,9
AAA,2013J,502585,600019,3,3
AAA,2013J,502585,600028,3,4
AAA,2013J,502585,600016,4,7
AAA,2013J,502585,600017,4,5
AAA,2013J,502585,600027,4,1
AAA,2013J,502585,600032,8,5
AAA,2013J,502585,600022,19,8
AAA,2013J,502585,600029,19,9
AAA,2013J,502585,600006,22,2
AAA,2013J,502585,600015,25,8
AAA,2013J,502585,600017,25,4
AAA,2013J,502585,600022,25,5
AAA,2013J,502585,600004,34,8
AAA,2013J,502585,600014,34,3
AAA,2013J,502585,600030,34,9
AAA,2013J,502585,600015,39,8
AAA,2013J,502585,600026,39,3
AAA,2013J,502585,600004,50,2
AAA,2013J,502585,600014,51,7
AAA,2013J,502585,600018,51,5
AAA,2013J,502585,600029,51,3
AAA,2013J,502585,600023,52,3
AAA,2013J,502585,600028,52,2
AAA,2013J,502585,600034,76,1
AAA,2013J,502585,600004,77,10
AAA,2013J,502585,600011,77,9
AAA,2013J,502585,600031,77,10
AAA,2013J,502585,600003,102,3
AAA,2013J,502585,600021,102,6
AAA,2013J,502585,600035,102,1
AAA,2013J,502585,600005,108,5
AAA,2013J,502585,600016,108,7
AAA,2013J,502585,600006,109,5
AAA,2013J,502585,600038,109,9
AAA,2013J,502585,600032,117,7
AAA,2013J,502585,600025,136,3
AAA,2013J,502585,600036,136,2
AAA,2013J,502585,600006,156,9
AAA,2013J,502585,600035,156,2
AAA,2013J,502585,600009,162,6
AAA,2013J,502585,600023,162,8
AAA,2013J,502585,600034,162,10
AAA,2013J,502585,600000,163,4
AAA,2013J,502585,600013,163,7
AAA,2013J,502585,600015,171,4
AAA,2013J,502585,600019,171,9
AAA,2013J,502585,600039,174,2
AAA,2013J,502585,600007,176,1
AAA,2013J,502585,600010,176,1
AAA,2013J,502585,600016,176,2
AAA,2013J,502585,600003,186,10
AAA,2013J,502585,600028,186,10
AAA,2013J,502585,600020,192,6
AAA,2013J,502585,600024,193,6
AAA,2013J,502585,600033,193,2
AAA,2013J,502585,600000,203,4
AAA,2013J,502585,600010,203,9
AAA,2013J,502585,600007,211,6
AAA,2013J,502585,600008,211,3
AAA,2013J,502585,600008,211,10
AAA,2013J,502585,600027,212,1
AAA,2013J,502585,600029,224,3
AAA,2013J,502585,600014,232,4
AAA,2013J,502585,600016,232,1
AAA,2013J,502585,600018,232,3
AAA,2013J,502585,600012,234,8
AAA,2013J,502585,600019,234,6
AAA,2013J,502585,600021,234,5
AAA,2013J,502585,600000,248,1
AAA,2013J,502585,600006,248,1
AAA,2013J,502585,600038,248,6
AAA,2013J,502585,600027,255,2
AAA,2013J,502585,600031,258,1
AAA,2013J,536709,600001,-8,10
AAA,2013J,536709,600028,-4,10
AAA,2013J,536709,600039,-4,10
AAA,2013J,536709,600004,14,2
AAA,2013J,536709,600006,14,10
AAA,2013J,536709,600020,21,8
AAA,2013J,536709,600027,21,2
AAA,2013J,536709,600031,21,1
AAA,2013J,536709,600005,27,10
AAA,2013J,536709,600036,27,8
AAA,2013J,536709,600037,27,4
AAA,2013J,536709,600022,33,2
AAA,2013J,536709,600022,42,7
AAA,2013J,536709,600022,42,9
AAA,2013J,536709,600028,49,6
AAA,2013J,536709,600024,58,9
AAA,2013J,536709,600010,64,6
AAA,2013J,536709,600004,69,8
AAA,2013J,536709,600013,69,9
AAA,2013J,536709,600039,69,1
AAA,2013J,536709,600007,81,4
AAA,2013J,536709,600016,81,3
AAA,2013J,536709,600037,88,1
AAA,2013J,536709,600037,88,4
AAA,2013J,536709,600002,104,5
AAA,2013J,536709,600027,104,9
AAA,2013J,536709,600002,105,6
AAA,2013J,536709,600003,106,7
AAA,2013J,536709,600005,106,8
AAA,2013J,536709,600029,106,1
AAA,2013J,536709,600016,115,10
AAA,2013J,536709,600026,115,2
AAA,2013J,536709,600031,115,9
AAA,2013J,536709,600012,122,1
AAA,2013J,536709,600034,122,5
AAA,2013J,536709,600004,128,10
AAA,2013J,536709,600036,128,6
AAA,2013J,536709,600006,134,10
AAA,2013J,536709,600006,140,4
AAA,2013J,536709,600025,140,3
AAA,2013J,536709,600039,140,3
AAA,2013J,536709,600017,148,10
AAA,2013J,536709,600008,156,5
AAA,2013J,536709,600032,156,9
AAA,2013J,536709,600009,162,3
AAA,2013J,536709,600017,162,5
AAA,2013J,536709,600018,162,3
AAA,2013J,536709,600033,164,3
AAA,2013J,536709,600039,164,2
AAA,2013J,536709,600008,169,4
AAA,2013J,536709,600017,169,4
AAA,2013J,536709,600035,169,8
AAA,2013J,536709,600012,171,8
AAA,2013J,536709,600003,176,6
AAA,2013J,536709,600014,176,5
AAA,2013J,536709,600032,177,9
AAA,2013J,536709,600019,185,4
AAA,2013J,536709,600031,185,8
AAA,2013J,536709,600007,191,10
AAA,2013J,536709,600033,196,9
AAA,2013J,536709,600027,200,6
AAA,2013J,536709,600025,212,1
AAA,2013J,536709,600029,212,4
AAA,2013J,536709,600010,215,4
AAA,2013J,536709,600029,215,1
AAA,2013J,536709,600001,216,8
AAA,2013J,536709,600015,216,4
AAA,2013J,536709,600022,216,10
AAA,2013J,536709,600007,221,2
AAA,2013J,536709,600013,221,9
AAA,2013J,536709,600027,221,7
AAA,2013J,536709,600022,228,8
AAA,2013J,536709,600031,228,9
AAA,2013J,536709,600011,232,1
AAA,2013J,536709,600033,232,4
AAA,2013J,536709,600015,233,9
AAA,2013J,536709,600031,233,9
AAA,2013J,536709,600016,235,4
AAA,2013J,536709,600011,245,5
AAA,2013J,536709,600018,245,2
AAA,2013J,536709,600032,247,3
AAA,2013J,536709,600039,252,5
AAA,2013J,536709,600006,253,9
AAA,2013J,536709,600029,253,4
AAA,2013J,536709,600009,255,10
AAA,2013J,536709,600009,255,5
AAA,2013J,536709,600024,255,10
AAA,2013J,536709,600009,256,4
AAA,2013J,536709,600022,256,3
AAA,2013J,536709,600028,256,8
AAA,2013J,536709,600012,263,8
AAA,2013J,536709,600014,263,1
AAA,2013J,536709,600021,263,2
AAA,2013J,568210,600028,-13,4
AAA,2013J,568210,600030,-13,9
AAA,2013J,568210,600024,-1,3
AAA,2013J,568210,600015,5,4
AAA,2013J,568210,600018,5,1
AAA,2013J,568210,600012,18,6
AAA,2013J,568210,600013,18,10
AAA,2013J,568210,600036,18,5
AAA,2013J,568210,600001,30,1
AAA,2013J,568210,600028,30,8
AAA,2013J,568210,600039,31,4
AAA,2013J,568210,600003,40,6
AAA,2013J,568210,600014,40,7
AAA,2013J,568210,600014,42,5
AAA,2013J,568210,600036,55,2
AAA,2013J,568210,600038,55,2
AAA,2013J,568210,600007,74,1
AAA,2013J,568210,600012,74,2
AAA,2013J,568210,600018,74,8
AAA,2013J,568210,600007,98,5
AAA,2013J,568210,600015,98,3
AAA,2013J,568210,600009,104,1
AAA,2013J,568210,600026,104,5
AAA,2013J,568210,600027,104,7
AAA,2013J,568210,600011,108,10
AAA,2013J,568210,600036,108,4
AAA,2013J,568210,600008,112,10
AAA,2013J,568210,600028,112,6
AAA,2013J,568210,600011,130,3
AAA,2013J,568210,600033,130,2
AAA,2013J,568210,600023,134,4
AAA,2013J,568210,600015,137,8
AAA,2013J,568210,600017,137,3
AAA,2013J,568210,600036,137,3
AAA,2013J,568210,600038,138,4
AAA,2013J,568210,600000,140,1
AAA,2013J,568210,600034,140,1
AAA,2013J,568210,600024,142,10
AAA,2013J,568210,600029,142,9
AAA,2013J,568210,600033,142,9
AAA,2013J,568210,600019,143,5
AAA,2013J,568210,600022,143,5
AAA,2013J,568210,600028,151,6
AAA,2013J,568210,600015,156,4
AAA,2013J,568210,600026,156,5
AAA,2013J,568210,600029,156,9
AAA,2013J,568210,600023,163,9
AAA,2013J,568210,600002,167,8
AAA,2013J,568210,600013,167,6
AAA,2013J,568210,600025,167,2
AAA,2013J,568210,600017,168,6
AAA,2013J,568210,600016,169,8
AAA,2013J,568210,600024,171,2
AAA,2013J,568210,600013,173,8
AAA,2013J,568210,600028,173,10
AAA,2013J,568210,600036,173,2
AAA,2013J,568210,600005,188,8
AAA,2013J,568210,600010,188,4
AAA,2013J,568210,600014,188,10
AAA,2013J,568210,600010,193,4
AAA,2013J,568210,600025,193,3
AAA,2013J,568210,600038,193,3
AAA,2013J,568210,600028,210,1
AAA,2013J,568210,600037,210,5
AAA,2013J,568210,600019,212,4
AAA,2013J,568210,600000,217,6
AAA,2013J,568210,600014,217,2
AAA,2013J,568210,600017,220,8
AAA,2013J,568210,600028,220,2
AAA,2013J,568210,600016,222,9
AAA,2013J,568210,600027,222,2
AAA,2013J,568210,600034,222,1
AAA,2013J,568210,600021,223,8
AAA,2013J,568210,600024,223,6
AAA,2013J,568210,600029,230,5
AAA,2013J,568210,600033,230,7
AAA,2013J,568210,600036,230,9
AAA,2013J,568210,600009,234,6
AAA,2013J,568210,600014,234,4
AAA,2013J,568210,600017,234,2
AAA,2013J,568210,600008,247,8
AAA,2013J,568210,600025,247,3
AAA,2013J,568210,600000,254,6
AAA,2013J,568210,600011,256,9
AAA,2013J,568210,600013,256,2
AAA,2013J,568210,600026,256,3
AAA,2013J,568210,600020,261,7
AAA,2013J,571628,600011,-11,2
AAA,2013J,571628,600020,-11,1
AAA,2013J,571628,600022,-2,3
AAA,2013J,571628,600030,-2,2
AAA,2013J,571628,600014,1,9
AAA,2013J,571628,600021,1,3
AAA,2013J,571628,600003,4,3
AAA,2013J,571628,600003,6,2
AAA,2013J,571628,600000,18,2
AAA,2013J,571628,600005,18,4
AAA,2013J,571628,600009,18,10
AAA,2013J,571628,600001,28,10
AAA,2013J,571628,600029,28,2
AAA,2013J,571628,600039,33,7
AAA,2013J,571628,600030,38,8
AAA,2013J,571628,600033,38,2
AAA,2013J,571628,600036,38,7
AAA,2013J,571628,600022,42,8
AAA,2013J,571628,600001,53,6
AAA,2013J,571628,600001,56,8
AAA,2013J,571628,600006,56,5
AAA,2013J,571628,600026,56,8
AAA,2013J,571628,600038,58,6
AAA,2013J,571628,600000,61,3
AAA,2013J,571628,600005,61,1
AAA,2013J,571628,600035,61,8
AAA,2013J,571628,600036,62,9
AAA,2013J,571628,600002,69,7
AAA,2013J,571628,600019,89,9
AAA,2013J,571628,600026,89,2
AAA,2013J,571628,600021,111,1
AAA,2013J,571628,600013,118,8
AAA,2013J,571628,600016,118,10
AAA,2013J,571628,600009,122,6
AAA,2013J,571628,600014,122,1
AAA,2013J,571628,600038,122,4
AAA,2013J,571628,600007,128,9
AAA,2013J,571628,600009,128,2
AAA,2013J,571628,600013,128,2
AAA,2013J,571628,600029,134,3
AAA,2013J,571628,600037,134,9
AAA,2013J,571628,600018,142,10
AAA,2013J,571628,600035,142,2
AAA,2013J,571628,600018,151,6
AAA,2013J,571628,600030,151,1
AAA,2013J,571628,600034,154,5
AAA,2013J,571628,600009,155,2
AAA,2013J,571628,600015,155,3
AAA,2013J,571628,600031,155,2
AAA,2013J,571628,600012,157,4
AAA,2013J,571628,600014,157,7
AAA,2013J,571628,600035,157,2
AAA,2013J,571628,600009,175,6
AAA,2013J,571628,600025,175,9
AAA,2013J,571628,600036,175,6
AAA,2013J,571628,600015,220,4
AAA,2013J,571628,600022,230,10
AAA,2013J,571628,600023,232,9
AAA,2013J,571628,600012,254,3
AAA,2013J,571628,600017,254,8
AAA,2013J,571628,600032,254,5
AAA,2013J,571628,600036,261,9
AAA,2013J,571628,600038,261,7
AAA,2013J,571628,600003,267,10
AAA,2013J,571628,600005,267,5
AAA,2013J,571628,600006,267,5
AAA,2013J,587737,600000,-8,7
AAA,2013J,587737,600010,-8,2
AAA,2013J,587737,600017,-8,5
AAA,2013J,587737,600027,-6,9
AAA,2013J,587737,600014,11,1
AAA,2013J,587737,600039,11,8
AAA,2013J,587737,600020,14,6
AAA,2013J,587737,600035,14,6
AAA,2013J,587737,600035,14,4
AAA,2013J,587737,600007,20,10
AAA,2013J,587737,600018,27,7
AAA,2013J,587737,600019,27,8
AAA,2013J,587737,600024,27,9
AAA,2013J,587737,600007,29,7
AAA,2013J,587737,600017,29,9
AAA,2013J,587737,600036,29,6
AAA,2013J,587737,600029,39,10
AAA,2013J,587737,600038,45,5
AAA,2013J,587737,600037,54,7
AAA,2013J,587737,600011,68,3
AAA,2013J,587737,600022,68,7
AAA,2013J,587737,600034,68,9
AAA,2013J,587737,600006,83,10
AAA,2013J,587737,600022,89,5
AAA,2013J,587737,600037,90,10
AAA,2013J,587737,600019,94,10
AAA,2013J,587737,600032,94,8
AAA,2013J,587737,600037,94,5
AAA,2013J,587737,600039,96,1
AAA,2013J,587737,600012,102,6
AAA,2013J,587737,600027,102,9
AAA,2013J,587737,600008,105,8
AAA,2013J,587737,600024,105,1
AAA,2013J,587737,600013,107,9
AAA,2013J,587737,600016,107,5
AAA,2013J,587737,600025,107,5
AAA,2013J,587737,600036,108,4
AAA,2013J,587737,600003,118,9
AAA,2013J,587737,600000,127,10
AAA,2013J,587737,600019,127,5
AAA,2013J,587737,600015,142,5
AAA,2013J,587737,600016,142,6
AAA,2013J,587737,600017,142,7
AAA,2013J,587737,600009,143,8
AAA,2013J,587737,600007,145,5
AAA,2013J,587737,600003,158,8
AAA,2013J,587737,600023,158,2
AAA,2013J,587737,600034,158,4
AAA,2013J,587737,600011,160,10
AAA,2013J,587737,600030,160,5
AAA,2013J,587737,600034,160,3
AAA,2013J,587737,600031,168,7
AAA,2013J,587737,600031,168,10
AAA,2013J,587737,600002,187,10
AAA,2013J,587737,600035,187,8
AAA,2013J,587737,600000,208,8
AAA,2013J,587737,600019,208,6
AAA,2013J,587737,600026,210,1
AAA,2013J,587737,600038,210,9
AAA,2013J,587737,600026,212,1
AAA,2013J,587737,600021,213,8
AAA,2013J,587737,600012,214,9
AAA,2013J,587737,600024,214,7
AAA,2013J,587737,600030,214,9
AAA,2013J,587737,600002,218,4
AAA,2013J,587737,600021,218,8
AAA,2013J,587737,600034,218,1
AAA,2013J,587737,600023,228,9
AAA,2013J,587737,600025,228,5
AAA,2013J,587737,600028,228,5
AAA,2013J,587737,600003,230,3
AAA,2013J,587737,600016,230,8
AAA,2013J,587737,600019,230,4
AAA,2013J,587737,600017,234,8
AAA,2013J,587737,600023,234,3
AAA,2013J,587737,600038,234,7
AAA,2013J,587737,600002,237,1
AAA,2013J,587737,600007,249,5
AAA,2013J,587737,600008,250,1
AAA,2013J,587737,600038,251,10
AAA,2013J,587737,600002,253,3
AAA,2013J,587737,600007,253,10
AAA,2013J,587737,600014,253,8
AAA,2013J,587737,600000,255,3
AAA,2013J,587737,600010,261,10
AAA,2013J,631572,600022,-12,6
AAA,2013J,631572,600033,-12,2
AAA,2013J,631572,600001,6,6
AAA,2013J,631572,600016,6,4
AAA,2013J,631572,600024,6,1
AAA,2013J,631572,600028,16,9
AAA,2013J,631572,600036,16,4
AAA,2013J,631572,600000,26,8
AAA,2013J,631572,600003,26,3
AAA,2013J,631572,600023,26,2
AAA,2013J,631572,600014,38,6
AAA,2013J,631572,600027,38,6
AAA,2013J,631572,600032,38,9
AAA,2013J,631572,600024,42,6
AAA,2013J,631572,600028,42,4
AAA,2013J,631572,600034,42,7
AAA,2013J,631572,600038,49,1
AAA,2013J,631572,600038,49,7
AAA,2013J,631572,600008,53,8
AAA,2013J,631572,600014,53,10
AAA,2013J,631572,600015,53,5
AAA,2013J,631572,600013,66,7
AAA,2013J,631572,600015,66,9
AAA,2013J,631572,600032,66,8
AAA,2013J,631572,600012,74,8
AAA,2013J,631572,600021,74,3
AAA,2013J,631572,600012,114,1
AAA,2013J,631572,600007,118,6
AAA,2013J,631572,600025,118,8
AAA,2013J,631572,600031,118,6
AAA,2013J,631572,600005,125,10
AAA,2013J,631572,600026,125,2
AAA,2013J,631572,600029,125,9
AAA,2013J,631572,600026,126,4
AAA,2013J,631572,600002,137,2
AAA,2013J,631572,600025,137,2
AAA,2013J,631572,600009,140,5
AAA,2013J,631572,600021,140,4
AAA,2013J,631572,600022,140,7
AAA,2013J,631572,600030,141,9
AAA,2013J,631572,600035,141,5
AAA,2013J,631572,600036,141,5
AAA,2013J,631572,600003,149,6
AAA,2013J,631572,600010,149,8
AAA,2013J,631572,600018,149,8
AAA,2013J,631572,600033,154,1
AAA,2013J,631572,600027,167,7
AAA,2013J,631572,600004,173,7
AAA,2013J,631572,600023,173,7
AAA,2013J,631572,600015,183,10
AAA,2013J,631572,600000,185,3
AAA,2013J,631572,600002,188,10
AAA,2013J,631572,600023,188,10
AAA,2013J,631572,600009,214,10
AAA,2013J,631572,600026,214,9
AAA,2013J,631572,600008,216,3
AAA,2013J,631572,600008,216,7
AAA,2013J,631572,600023,216,9
AAA,2013J,631572,600002,219,1
AAA,2013J,631572,600024,219,4
AAA,2013J,631572,600034,219,6
AAA,2013J,631572,600021,232,9
AAA,2013J,631572,600003,234,1
AAA,2013J,631572,600019,234,6
AAA,2013J,631572,600021,234,9
AAA,2013J,631572,600002,248,9
AAA,2013J,631572,600002,249,3
AAA,2013J,631572,600030,249,8
AAA,2013J,631572,600015,250,6
AAA,2013J,638241,600024,-13,7
AAA,2013J,638241,600004,-10,6
AAA,2013J,638241,600033,-10,6
AAA,2013J,638241,600037,-10,4
AAA,2013J,638241,600027,-6,3
AAA,2013J,638241,600038,-6,1
AAA,2013J,638241,600033,-5,10
AAA,2013J,638241,600021,-2,10
AAA,2013J,638241,600025,-2,7
AAA,2013J,638241,600027,-2,5
AAA,2013J,638241,600019,-1,3
AAA,2013J,638241,600022,-1,7
AAA,2013J,638241,600016,14,4
AAA,2013J,638241,600019,14,2
AAA,2013J,638241,600002,15,8
AAA,2013J,638241,600027,15,1
AAA,2013J,638241,600002,16,4
AAA,2013J,638241,600012,24,9
AAA,2013J,638241,600009,32,1
AAA,2013J,638241,600021,33,6
AAA,2013J,638241,600028,33,9
AAA,2013J,638241,600031,33,4
AAA,2013J,638241,600006,41,8
AAA,2013J,638241,600035,53,2
AAA,2013J,638241,600035,53,2
AAA,2013J,638241,600026,59,4
AAA,2013J,638241,600014,60,3
AAA,2013J,638241,600019,62,2
AAA,2013J,638241,600020,62,7
AAA,2013J,638241,600013,77,6
AAA,2013J,638241,600025,77,1
AAA,2013J,638241,600033,77,4
AAA,2013J,638241,600005,94,6
AAA,2013J,638241,600015,94,2
AAA,2013J,638241,600032,95,1
AAA,2013J,638241,600039,95,7
AAA,2013J,638241,600015,98,8
AAA,2013J,638241,600023,98,5
AAA,2013J,638241,600006,105,5
AAA,2013J,638241,600018,105,5
AAA,2013J,638241,600008,120,8
AAA,2013J,638241,600026,120,9
AAA,2013J,638241,600003,121,2
AAA,2013J,638241,600005,121,9
AAA,2013J,638241,600030,121,4
AAA,2013J,638241,600021,124,3
AAA,2013J,638241,600035,124,7
AAA,2013J,638241,600002,128,8
AAA,2013J,638241,600020,128,10
AAA,2013J,638241,600029,128,9
AAA,2013J,638241,600006,129,4
AAA,2013J,638241,600036,129,7
AAA,2013J,638241,600018,139,3
AAA,2013J,638241,600024,139,10
AAA,2013J,638241,600023,147,8
AAA,2013J,638241,600025,147,10
AAA,2013J,638241,600035,147,7
AAA,2013J,638241,600002,152,10
AAA,2013J,638241,600006,152,6
AAA,2013J,638241,600028,152,5
AAA,2013J,638241,600017,159,2
AAA,2013J,638241,600022,159,6
AAA,2013J,638241,600029,159,8
AAA,2013J,638241,600000,163,5
AAA,2013J,638241,600018,163,8
AAA,2013J,638241,600007,175,1
AAA,2013J,638241,600010,175,5
AAA,2013J,638241,600033,175,3
AAA,2013J,638241,600008,177,4
AAA,2013J,638241,600023,177,3
AAA,2013J,638241,600002,188,2
AAA,2013J,638241,600019,188,4
AAA,2013J,638241,600014,195,8
AAA,2013J,638241,600023,199,5
AAA,2013J,638241,600011,206,2
AAA,2013J,638241,600034,206,10
AAA,2013J,638241,600037,206,8
AAA,2013J,638241,600002,219,2
AAA,2013J,638241,600033,219,9
AAA,2013J,638241,600039,219,8
AAA,2013J,638241,600013,220,8
AAA,2013J,638241,600019,220,2
AAA,2013J,638241,600024,220,1
AAA,2013J,638241,600013,224,2
AAA,2013J,638241,600013,224,5
AAA,2013J,638241,600026,224,3
AAA,2013J,638241,600023,227,7
AAA,2013J,638241,600023,227,4
AAA,2013J,638241,600033,229,3
AAA,2013J,638241,600004,235,10
AAA,2013J,638241,600032,235,10
AAA,2013J,638241,600020,250,6
AAA,2013J,638241,600011,252,6
AAA,2013J,638241,600013,252,6
AAA,2013J,638241,600026,252,10
AAA,2013J,638241,600016,259,10
AAA,2013J,638241,600015,262,5
AAA,2013J,638241,600034,262,9
AAA,2013J,638241,600036,262,1
AAA,2013J,662746,600009,4,3
AAA,2013J,662746,600031,4,6
AAA,2013J,662746,600011,11,2
AAA,2013J,662746,600018,24,1
AAA,2013J,662746,600036,24,2
AAA,2013J,662746,600039,24,6
AAA,2013J,662746,600000,37,3
AAA,2013J,662746,600004,41,3
AAA,2013J,662746,600004,41,3
AAA,2013J,662746,600001,52,9
AAA,2013J,662746,600026,52,7
AAA,2013J,662746,600037,52,4
AAA,2013J,662746,600003,72,8
AAA,2013J,662746,600004,72,3
AAA,2013J,662746,600028,72,5
AAA,2013J,662746,600038,81,3
AAA,2013J,662746,600039,81,2
AAA,2013J,662746,600029,96,2
AAA,2013J,662746,600035,96,8
AAA,2013J,662746,600014,100,6
AAA,2013J,662746,600027,100,1
AAA,2013J,662746,600035,100,3
AAA,2013J,662746,600020,107,9
AAA,2013J,662746,600030,107,10
AAA,2013J,662746,600029,108,7
AAA,2013J,662746,600008,110,9
AAA,2013J,662746,600017,110,4
AAA,2013J,662746,600023,110,9
AAA,2013J,662746,600008,128,10
AAA,2013J,662746,600012,128,4
AAA,2013J,662746,600014,128,9
AAA,2013J,662746,600035,132,6
AAA,2013J,662746,600028,143,2
AAA,2013J,662746,600031,143,6
AAA,2013J,662746,600025,146,2
AAA,2013J,662746,600001,147,5
AAA,2013J,662746,600012,147,1
AAA,2013J,662746,600025,147,2
AAA,2013J,662746,600023,160,5
AAA,2013J,662746,600032,160,8
AAA,2013J,662746,600007,163,7
AAA,2013J,662746,600010,183,1
AAA,2013J,662746,600029,183,5
AAA,2013J,662746,600028,184,2
AAA,2013J,662746,600037,184,3
AAA,2013J,662746,600009,198,1
AAA,2013J,662746,600038,198,6
AAA,2013J,662746,600022,199,6
AAA,2013J,662746,600031,199,2
AAA,2013J,662746,600035,199,10
AAA,2013J,662746,600032,201,7
AAA,2013J,662746,600003,205,7
AAA,2013J,662746,600017,205,1
AAA,2013J,662746,600026,205,6
AAA,2013J,662746,600024,216,9
AAA,2013J,662746,600017,219,7
AAA,2013J,662746,600025,219,5
AAA,2013J,662746,600001,220,4
AAA,2013J,662746,600011,220,7
AAA,2013J,662746,600008,224,4
AAA,2013J,662746,600021,224,9
AAA,2013J,662746,600031,224,3
AAA,2013J,662746,600023,226,10
AAA,2013J,662746,600039,226,6
AAA,2013J,662746,600029,231,3
AAA,2013J,662746,600008,232,10
AAA,2013J,662746,600015,232,5
AAA,2013J,662746,600036,232,9
AAA,2013J,662746,600012,249,9
AAA,2013J,662746,600017,249,3
AAA,2013J,662746,600010,252,10
AAA,2013J,662746,600025,252,9
AAA,2013J,662746,600034,252,9
AAA,2013J,662746,600005,253,4
AAA,2013J,662746,600009,253,2
AAA,2013J,662746,600025,255,2
AAA,2013J,662746,600030,255,7
AAA,2013J,662746,600012,257,6
AAA,2013J,662746,600024,257,8
AAA,2013J,662746,600025,263,10
AAA,2013J,662746,600038,263,4
AAA,2013J,662746,600013,266,10
AAA,2013J,662746,600037,266,1
AAA,2013J,669161,600033,-14,3
AAA,2013J,669161,600022,-10,8
AAA,2013J,669161,600023,-10,5
AAA,2013J,669161,600034,-10,3
AAA,2013J,669161,600005,2,10
AAA,2013J,669161,600021,2,6
AAA,2013J,669161,600017,3,5
AAA,2013J,669161,600034,17,9
AAA,2013J,669161,600003,22,7
AAA,2013J,669161,600020,23,6
AAA,2013J,669161,600010,32,9
AAA,2013J,669161,600013,32,8
AAA,2013J,669161,600006,33,3
AAA,2013J,669161,600009,33,5
AAA,2013J,669161,600002,34,5
AAA,2013J,669161,600004,34,5
AAA,2013J,669161,600032,34,4
AAA,2013J,669161,600000,35,4
AAA,2013J,669161,600020,35,6
AAA,2013J,669161,600021,35,1
AAA,2013J,669161,600035,39,8
AAA,2013J,669161,600008,42,3
AAA,2013J,669161,600004,46,4
AAA,2013J,669161,600036,46,3
AAA,2013J,669161,600010,47,2
AAA,2013J,669161,600001,48,9
AAA,2013J,669161,600028,48,7
AAA,2013J,669161,600001,55,1
AAA,2013J,669161,600002,55,3
AAA,2013J,669161,600028,55,7
AAA,2013J,669161,600022,58,9
AAA,2013J,669161,600028,58,5
AAA,2013J,669161,600039,58,4
AAA,2013J,669161,600000,61,10
AAA,2013J,669161,600011,61,10
AAA,2013J,669161,600033,61,4
AAA,2013J,669161,600016,79,10
AAA,2013J,669161,600030,79,7
AAA,2013J,669161,600030,79,3
AAA,2013J,669161,600010,94,8
AAA,2013J,669161,600037,94,7
AAA,2013J,669161,600028,104,6
AAA,2013J,669161,600036,104,2
AAA,2013J,669161,600004,105,10
AAA,2013J,669161,600024,105,10
AAA,2013J,669161,600033,105,4
AAA,2013J,669161,600014,107,7
AAA,2013J,669161,600012,122,3
AAA,2013J,669161,600021,122,2
AAA,2013J,669161,600033,125,6
AAA,2013J,669161,600036,125,7
AAA,2013J,669161,600015,144,5
AAA,2013J,669161,600010,152,8
AAA,2013J,669161,600029,152,1
AAA,2013J,669161,600013,154,4
AAA,2013J,669161,600025,154,10
AAA,2013J,669161,600032,157,8
AAA,2013J,669161,600034,157,1
AAA,2013J,669161,600000,160,6
AAA,2013J,669161,600009,160,9
AAA,2013J,669161,600019,160,2
AAA,2013J,669161,600028,164,5
AAA,2013J,669161,600036,164,7
AAA,2013J,669161,600037,164,2
AAA,2013J,669161,600020,166,6
AAA,2013J,669161,600029,166,8
AAA,2013J,669161,600032,166,8
AAA,2013J,669161,600015,172,8
AAA,2013J,669161,600020,172,7
AAA,2013J,669161,600037,176,3
AAA,2013J,669161,600017,180,2
AAA,2013J,669161,600021,182,7
AAA,2013J,669161,600020,184,10
AAA,2013J,669161,600032,184,6
AAA,2013J,669161,600008,192,1
AAA,2013J,669161,600030,192,2
AAA,2013J,669161,600000,202,9
AAA,2013J,669161,600025,202,10
AAA,2013J,669161,600015,212,8
AAA,2013J,669161,600026,212,8
AAA,2013J,669161,600032,212,8
AAA,2013J,669161,600024,215,5
AAA,2013J,669161,600032,215,8
AAA,2013J,669161,600033,215,6
AAA,2013J,669161,600009,218,5
AAA,2013J,669161,600005,223,6
AAA,2013J,669161,600015,223,5
AAA,2013J,669161,600036,223,8
AAA,2013J,669161,600008,240,9
AAA,2013J,669161,600026,240,2
AAA,2013J,669161,600028,251,5
AAA,2013J,669161,600037,251,4
AAA,2013J,669161,600023,259,2
AAA,2013J,692187,600018,-13,1
AAA,2013J,692187,600014,-4,2
AAA,2013J,692187,600000,-1,6
AAA,2013J,692187,600018,-1,1
AAA,2013J,692187,600024,-1,4
AAA,2013J,692187,600034,11,1
AAA,2013J,692187,600033,16,8
AAA,2013J,692187,600006,21,8
AAA,2013J,692187,600010,21,5
AAA,2013J,692187,600022,21,9
AAA,2013J,692187,600001,25,1
AAA,2013J,692187,600006,25,2
AAA,2013J,692187,600028,25,8
AAA,2013J,692187,600006,34,9
AAA,2013J,692187,600006,34,4
AAA,2013J,692187,600034,34,8
AAA,2013J,692187,600012,38,7
AAA,2013J,692187,600030,38,7
AAA,2013J,692187,600033,38,7
AAA,2013J,692187,600017,39,2
AAA,2013J,692187,600026,39,7
AAA,2013J,692187,600035,39,6
AAA,2013J,692187,600028,43,10
AAA,2013J,692187,600006,48,10
AAA,2013J,692187,600035,48,1
AAA,2013J,692187,600002,51,9
AAA,2013J,692187,600016,51,10
AAA,2013J,692187,600019,51,3
AAA,2013J,692187,600015,53,4
AAA,2013J,692187,600016,53,5
AAA,2013J,692187,600029,53,4
AAA,2013J,692187,600014,54,4
AAA,2013J,692187,600015,55,3
AAA,2013J,692187,600023,55,10
AAA,2013J,692187,600025,55,4
AAA,2013J,692187,600030,62,10
AAA,2013J,692187,600035,62,8
AAA,2013J,692187,600026,69,10
AAA,2013J,692187,600039,69,7
AAA,2013J,692187,600001,79,6
AAA,2013J,692187,600036,79,2
AAA,2013J,692187,600003,91,8
AAA,2013J,692187,600028,96,3
AAA,2013J,692187,600027,98,7
AAA,2013J,692187,600039,98,9
AAA,2013J,692187,600005,100,6
AAA,2013J,692187,600030,100,10
AAA,2013J,692187,600015,106,5
AAA,2013J,692187,600030,106,7
AAA,2013J,692187,600016,108,4
AAA,2013J,692187,600032,108,4
AAA,2013J,692187,600034,108,6
AAA,2013J,692187,600034,110,6
AAA,2013J,692187,600000,121,5
AAA,2013J,692187,600038,121,4
AAA,2013J,692187,600006,142,4
AAA,2013J,692187,600006,145,4
AAA,2013J,692187,600006,145,4
AAA,2013J,692187,600016,145,7
AAA,2013J,692187,600021,160,4
AAA,2013J,692187,600026,160,9
AAA,2013J,692187,600002,182,5
AAA,2013J,692187,600010,182,1
AAA,2013J,692187,600005,184,10
AAA,2013J,692187,600006,184,10
AAA,2013J,692187,600005,190,1
AAA,2013J,692187,600001,194,8
AAA,2013J,692187,600039,194,4
AAA,2013J,692187,600039,194,9
AAA,2013J,692187,600007,199,5
AAA,2013J,692187,600018,199,10
AAA,2013J,692187,600035,199,2
AAA,2013J,692187,600025,211,3
AAA,2013J,692187,600002,217,8
AAA,2013J,692187,600006,217,6
AAA,2013J,692187,600024,217,5
AAA,2013J,692187,600007,224,5
AAA,2013J,692187,600005,228,9
AAA,2013J,692187,600012,228,8
AAA,2013J,692187,600027,228,2
AAA,2013J,692187,600002,248,3
AAA,2013J,692187,600008,248,9
AAA,2013J,692187,600019,248,3
AAA,2013J,692187,600012,251,1
AAA,2013J,692187,600015,251,2
AAA,2013J,692187,600028,251,8
AAA,2013J,692187,600019,260,10
AAA,2013J,692187,600021,260,9
AAA,2013J,692187,600034,260,9
AAA,2013J,692187,600003,263,10
AAA,2013J,692187,600021,263,6
AAA,2013J,692187,600027,263,8
AAA,2013J,692187,600012,265,10
AAA,2013J,692187,600033,265,5
AAA,2013J,692187,600034,265,3
AAA,2013J,738707,600034,-14,2
AAA,2013J,738707,600003,-11,1
AAA,2013J,738707,600017,-11,2
AAA,2013J,738707,600023,-11,6
AAA,2013J,738707,600020,0,1
AAA,2013J,738707,600023,8,9
AAA,2013J,738707,600030,15,8
AAA,2013J,738707,600038,15,2
AAA,2013J,738707,600021,20,10
AAA,2013J,738707,600002,23,8
AAA,2013J,738707,600030,23,7
AAA,2013J,738707,600001,28,4
AAA,2013J,738707,600007,28,3
AAA,2013J,738707,600033,28,7
AAA,2013J,738707,600030,44,6
AAA,2013J,738707,600003,45,8
AAA,2013J,738707,600016,45,3
AAA,2013J,738707,600019,45,3
AAA,2013J,738707,600007,53,7
AAA,2013J,738707,600017,53,6
AAA,2013J,738707,600022,53,5
AAA,2013J,738707,600005,57,2
AAA,2013J,738707,600008,57,3
AAA,2013J,738707,600009,78,4
AAA,2013J,738707,600015,78,2
AAA,2013J,738707,600026,78,2
AAA,2013J,738707,600003,83,9
AAA,2013J,738707,600027,83,3
AAA,2013J,738707,600015,88,7
AAA,2013J,738707,600019,88,2
AAA,2013J,738707,600028,88,10
AAA,2013J,738707,600001,95,3
AAA,2013J,738707,600015,95,7
AAA,2013J,738707,600021,95,10
AAA,2013J,738707,600026,107,8
AAA,2013J,738707,600005,108,4
AAA,2013J,738707,600024,108,8
AAA,2013J,738707,600016,109,8
AAA,2013J,738707,600018,109,3
AAA,2013J,738707,600030,110,9
AAA,2013J,738707,600004,135,9
AAA,2013J,738707,600031,135,9
AAA,2013J,738707,600000,138,7
AAA,2013J,738707,600019,138,7
AAA,2013J,738707,600028,138,4
AAA,2013J,738707,600033,141,10
AAA,2013J,738707,600002,147,8
AAA,2013J,738707,600004,147,10
AAA,2013J,738707,600015,147,1
AAA,2013J,738707,600018,151,6
AAA,2013J,738707,600008,156,5
AAA,2013J,738707,600012,159,1
AAA,2013J,738707,600017,172,3
AAA,2013J,738707,600003,177,7
AAA,2013J,738707,600004,177,8
AAA,2013J,738707,600017,177,6
AAA,2013J,738707,600017,180,1
AAA,2013J,738707,600036,180,2
AAA,2013J,738707,600001,181,5
AAA,2013J,738707,600039,181,5
AAA,2013J,738707,600006,182,3
AAA,2013J,738707,600023,182,3
AAA,2013J,738707,600027,182,2
AAA,2013J,738707,600004,187,5
AAA,2013J,738707,600010,187,5
AAA,2013J,738707,600015,187,8
AAA,2013J,738707,600000,189,4
AAA,2013J,738707,600006,189,2
AAA,2013J,738707,600020,189,3
AAA,2013J,738707,600024,192,3
AAA,2013J,738707,600032,192,3
AAA,2013J,738707,600025,193,5
AAA,2013J,738707,600028,193,7
AAA,2013J,738707,600033,196,4
AAA,2013J,738707,600014,207,6
AAA,2013J,738707,600004,217,7
AAA,2013J,738707,600007,221,2
AAA,2013J,738707,600005,222,6
AAA,2013J,738707,600016,222,8
AAA,2013J,738707,600006,242,8
AAA,2013J,738707,600015,242,8
AAA,2013J,738707,600016,242,5
AAA,2013J,738707,600017,243,1
AAA,2013J,738707,600019,243,6
AAA,2013J,738707,600021,243,5
AAA,2013J,738707,600025,248,7
AAA,2013J,738707,600003,256,7
AAA,2013J,738707,600006,256,5
AAA,2013J,738707,600021,256,6
AAA,2013J,738707,600017,257,7
AAA,2013J,738707,600031,257,2
AAA,2013J,738707,600039,257,6
AAA,2013J,738707,600039,258,7
AAA,2013J,738707,600014,262,10
AAA,2013J,765872,600004,-14,1
AAA,2013J,765872,600006,-14,5
AAA,2013J,765872,600009,-14,2
AAA,2013J,765872,600023,-11,8
AAA,2013J,765872,600004,-9,9
AAA,2013J,765872,600015,-1,10
AAA,2013J,765872,600030,-1,8
AAA,2013J,765872,600011,5,3
AAA,2013J,765872,600018,5,7
AAA,2013J,765872,600030,5,7
AAA,2013J,765872,600023,6,6
AAA,2013J,765872,600007,8,10
AAA,2013J,765872,600010,8,10
AAA,2013J,765872,600030,8,2
AAA,2013J,765872,600010,10,2
AAA,2013J,765872,600031,10,1
AAA,2013J,765872,600018,17,10
AAA,2013J,765872,600021,17,4
AAA,2013J,765872,600022,17,4
AAA,2013J,765872,600005,18,6
AAA,2013J,765872,600018,18,6
AAA,2013J,765872,600033,18,4
AAA,2013J,765872,600015,28,2
AAA,2013J,765872,600018,28,9
AAA,2013J,765872,600008,32,10
AAA,2013J,765872,600038,32,10
AAA,2013J,765872,600023,35,4
AAA,2013J,765872,600010,48,6
AAA,2013J,765872,600022,48,10
AAA,2013J,765872,600020,50,5
AAA,2013J,765872,600022,50,8
AAA,2013J,765872,600018,51,8
AAA,2013J,765872,600022,51,4
AAA,2013J,765872,600016,65,10
AAA,2013J,765872,600023,76,8
AAA,2013J,765872,600028,76,2
AAA,2013J,765872,600010,77,2
AAA,2013J,765872,600029,77,3
AAA,2013J,765872,600031,77,8
AAA,2013J,765872,600026,87,4
AAA,2013J,765872,600035,87,7
AAA,2013J,765872,600036,87,9
AAA,2013J,765872,600012,112,10
AAA,2013J,765872,600037,116,2
AAA,2013J,765872,600020,117,6
AAA,2013J,765872,600029,117,9
AAA,2013J,765872,600030,117,2
AAA,2013J,765872,600026,140,9
AAA,2013J,765872,600027,156,5
AAA,2013J,765872,600035,156,4
AAA,2013J,782363,600037,-11,6
AAA,2013J,782363,600010,10,1
AAA,2013J,782363,600018,10,9
AAA,2013J,782363,600026,11,6
AAA,2013J,782363,600033,11,7
AAA,2013J,782363,600007,13,7
AAA,2013J,782363,600012,13,7
AAA,2013J,782363,600012,13,2
AAA,2013J,782363,600019,14,4
AAA,2013J,782363,600039,18,1
AAA,2013J,782363,600030,19,3
AAA,2013J,782363,600031,22,5
AAA,2013J,782363,600009,30,4
AAA,2013J,782363,600011,30,1
AAA,2013J,782363,600035,30,4
AAA,2013J,782363,600007,33,1
AAA,2013J,782363,600024,33,5
AAA,2013J,782363,600032,33,8
AAA,2013J,782363,600025,42,4
AAA,2013J,782363,600004,44,2
AAA,2013J,782363,600006,44,7
AAA,2013J,782363,600012,44,4
AAA,2013J,782363,600020,45,7
AAA,2013J,782363,600022,45,10
AAA,2013J,782363,600030,45,5
AAA,2013J,782363,600034,54,5
AAA,2013J,782363,600017,60,5
AAA,2013J,782363,600025,67,5
AAA,2013J,782363,600036,67,1
AAA,2013J,782363,600000,73,6
AAA,2013J,782363,600021,73,3
AAA,2013J,782363,600037,73,5
AAA,2013J,782363,600029,79,6
AAA,2013J,782363,600034,79,3
AAA,2013J,782363,600002,81,6
AAA,2013J,782363,600015,81,8
AAA,2013J,782363,600027,81,7
AAA,2013J,782363,600005,87,9
AAA,2013J,782363,600033,87,6
AAA,2013J,782363,600001,90,5
AAA,2013J,782363,600036,90,2
AAA,2013J,782363,600006,94,8
AAA,2013J,782363,600014,96,4
AAA,2013J,782363,600007,104,8
AAA,2013J,782363,600014,104,10
AAA,2013J,782363,600023,104,3
AAA,2013J,782363,600029,118,10
AAA,2013J,782363,600037,118,10
AAA,2013J,782363,600036,139,3
AAA,2013J,782363,600006,145,1
AAA,2013J,782363,600018,145,2
AAA,2013J,782363,600024,145,6
AAA,2013J,782363,600018,159,4
AAA,2013J,782363,600009,160,2
AAA,2013J,782363,600036,160,5
AAA,2013J,782363,600001,168,7
AAA,2013J,782363,600030,168,9
AAA,2013J,782363,600032,168,8
AAA,2013J,782363,600011,180,7
AAA,2013J,782363,600036,180,8
AAA,2013J,782363,600035,182,6
AAA,2013J,782363,600039,182,1
AAA,2013J,782363,600021,188,3
AAA,2013J,782363,600032,188,10
AAA,2013J,782363,600005,192,3
AAA,2013J,782363,600010,192,1
AAA,2013J,782363,600030,192,2
AAA,2013J,782363,600010,195,6
AAA,2013J,782363,600017,195,7
AAA,2013J,782363,600031,195,3
AAA,2013J,782363,600005,202,9
AAA,2013J,782363,600032,202,7
AAA,2013J,782363,600032,202,4
AAA,2013J,782363,600010,204,5
AAA,2013J,782363,600017,204,10
AAA,2013J,782363,600019,204,7
AAA,2013J,881947,600002,-6,8
AAA,2013J,881947,600023,-6,2
AAA,2013J,881947,600001,2,3
AAA,2013J,881947,600009,2,5
AAA,2013J,881947,600018,2,10
AAA,2013J,881947,600005,17,6
AAA,2013J,881947,600007,17,3
AAA,2013J,881947,600017,17,1
AAA,2013J,881947,600007,18,5
AAA,2013J,881947,600008,18,7
AAA,2013J,881947,600031,18,5
AAA,2013J,881947,600021,23,1
AAA,2013J,881947,600037,23,9
AAA,2013J,881947,600002,26,3
AAA,2013J,881947,600032,26,10
AAA,2013J,881947,600018,37,1
AAA,2013J,881947,600024,37,9
AAA,2013J,881947,600001,40,6
AAA,2013J,881947,600039,40,8
AAA,2013J,881947,600024,45,3
AAA,2013J,881947,600027,47,5
AAA,2013J,881947,600038,47,5
AAA,2013J,881947,600004,50,6
AAA,2013J,881947,600034,50,5
AAA,2013J,881947,600015,51,10
AAA,2013J,881947,600025,51,4
AAA,2013J,881947,600038,51,5
AAA,2013J,881947,600005,54,10
AAA,2013J,881947,600011,54,9
AAA,2013J,881947,600027,54,2
AAA,2013J,881947,600025,56,2
AAA,2013J,881947,600034,56,3
AAA,2013J,881947,600035,56,5
AAA,2013J,881947,600005,61,10
AAA,2013J,881947,600025,61,10
AAA,2013J,881947,600035,61,6
AAA,2013J,881947,600000,66,8
AAA,2013J,881947,600005,66,3
AAA,2013J,881947,600010,66,8
AAA,2013J,881947,600009,70,2
AAA,2013J,881947,600014,70,3
AAA,2013J,881947,600025,72,8
AAA,2013J,881947,600000,74,7
AAA,2013J,881947,600020,74,6
AAA,2013J,881947,600002,75,5
AAA,2013J,881947,600014,75,6
AAA,2013J,881947,600038,75,9
AAA,2013J,881947,600030,78,10
AAA,2013J,881947,600038,78,6
AAA,2013J,881947,600023,82,10
AAA,2013J,881947,600034,82,5
AAA,2013J,881947,600020,103,10
AAA,2013J,881947,600029,103,4
AAA,2013J,881947,600026,106,8
AAA,2013J,881947,600033,106,5
AAA,2013J,881947,600030,114,2
AAA,2013J,881947,600002,132,10
AAA,2013J,881947,600016,132,2
AAA,2013J,881947,600029,132,8
AAA,2013J,881947,600025,143,1
AAA,2013J,881947,600032,143,3
AAA,2013J,881947,600038,143,1
AAA,2013J,881947,600003,145,5
AAA,2013J,881947,600032,145,9
AAA,2013J,881947,600011,153,1
AAA,2013J,881947,600022,153,6
AAA,2013J,881947,600003,163,3
AAA,2013J,881947,600030,163,7
AAA,2013J,881947,600035,163,9
AAA,2013J,881947,600000,166,6
AAA,2013J,881947,600019,166,1
AAA,2013J,881947,600023,166,5
AAA,2013J,881947,600016,168,1
AAA,2013J,881947,600037,185,3
AAA,2013J,881947,600014,186,6
AAA,2013J,881947,600028,186,2
AAA,2013J,881947,600034,186,5
AAA,2013J,881947,600007,195,1
AAA,2013J,881947,600037,196,3
AAA,2013J,881947,600015,199,1
AAA,2013J,881947,600027,199,7
AAA,2013J,881947,600031,199,7
AAA,2013J,881947,600023,204,2
AAA,2013J,881947,600002,218,1
AAA,2013J,881947,600018,264,6
AAA,2013J,881947,600030,264,10
AAA,2013J,881947,600002,266,4
AAA,2013J,881947,600017,266,4
AAA,2013J,881947,600035,266,8
AAA,2013J,920801,600013,-11,8
AAA,2013J,920801,600016,-11,5
AAA,2013J,920801,600032,-11,9
AAA,2013J,920801,600019,12,8
AAA,2013J,920801,600023,12,10
AAA,2013J,920801,600038,12,1
AAA,2013J,920801,600003,13,6
AAA,2013J,920801,600012,13,1
AAA,2013J,920801,600015,13,5
AAA,2013J,920801,600039,15,6
AAA,2013J,920801,600004,20,3
AAA,2013J,920801,600005,25,6
AAA,2013J,920801,600014,25,1
AAA,2013J,920801,600038,30,3
AAA,2013J,920801,600036,46,6
AAA,2013J,920801,600009,51,10
AAA,2013J,920801,600012,51,5
AAA,2013J,920801,600038,51,6
AAA,2013J,920801,600018,67,2
AAA,2013J,920801,600039,71,5
AAA,2013J,920801,600006,103,4
AAA,2013J,920801,600036,103,4
AAA,2013J,920801,600022,110,3
AAA,2013J,920801,600038,110,6
AAA,2013J,920801,600012,117,4
AAA,2013J,920801,600014,117,6
AAA,2013J,920801,600023,117,10
AAA,2013J,920801,600016,118,4
AAA,2013J,920801,600018,118,10
AAA,2013J,920801,600036,118,2
AAA,2013J,920801,600006,121,1
AAA,2013J,920801,600007,121,2
AAA,2013J,920801,600026,121,5
AAA,2013J,920801,600012,122,5
AAA,2013J,920801,600027,141,9
AAA,2013J,920801,600028,141,7
AAA,2013J,920801,600000,165,2
AAA,2013J,920801,600004,165,4
AAA,2013J,920801,600006,165,2
AAA,2013J,920801,600038,171,9
AAA,2013J,920801,600020,175,2
AAA,2013J,920801,600038,175,6
AAA,2013J,920801,600013,178,5
AAA,2013J,920801,600009,179,9
AAA,2013J,920801,600014,179,6
AAA,2013J,920801,600035,179,1
AAA,2013J,920801,600025,195,2
AAA,2013J,920801,600002,207,5
AAA,2013J,920801,600019,207,2
AAA,2013J,920801,600019,207,4
AAA,2013J,920801,600020,209,6
AAA,2013J,920801,600033,209,2
AAA,2013J,920801,600008,217,1
AAA,2013J,920801,600013,217,4
AAA,2013J,920801,600038,217,1
AAA,2013J,920801,600012,219,10
AAA,2013J,920801,600035,219,2
AAA,2013J,920801,600003,221,1
AAA,2013J,920801,600025,244,4
AAA,2013J,920801,600028,244,1
AAA,2013J,920801,600037,244,6
AAA,2013J,920801,600013,248,7
AAA,2013J,920801,600022,248,5
AAA,2013J,920801,600010,252,2
AAA,2013J,920801,600028,252,2
AAA,2013J,920801,600031,252,6
AAA,2013J,920801,600021,254,10
AAA,2013J,920801,600020,255,9
AAA,2013J,920801,600026,255,5
AAA,2013J,920801,600031,255,7
AAA,2013J,920801,600020,259,10
AAA,2013J,920801,600032,259,7
AAA,2013J,920801,600018,262,5
AAA,2013J,920801,600029,262,9
AAA,2013J,920801,600034,262,2
AAA,2013J,920801,600028,265,2
AAA,2013J,979672,600002,-4,6
AAA,2013J,979672,600003,-4,1
AAA,2013J,979672,600026,-4,3
AAA,2013J,979672,600020,0,3
AAA,2013J,979672,600021,0,6
AAA,2013J,979672,600022,0,1
AAA,2013J,979672,600008,1,2
AAA,2013J,979672,600010,1,10
AAA,2013J,979672,600032,1,7
AAA,2013J,979672,600001,11,3
AAA,2013J,979672,600030,11,2
AAA,2013J,979672,600010,22,10
AAA,2013J,979672,600003,34,4
AAA,2013J,979672,600011,34,3
AAA,2013J,979672,600037,34,1
AAA,2013J,979672,600038,44,10
AAA,2013J,979672,600013,58,3
AAA,2013J,979672,600012,70,3
AAA,2013J,979672,600029,70,7
AAA,2013J,979672,600035,70,2
AAA,2013J,979672,600015,82,10
AAA,2013J,979672,600025,82,4
AAA,2013J,979672,600002,91,4
AAA,2013J,979672,600014,91,1
AAA,2013J,979672,600017,91,2
AAA,2013J,979672,600012,98,2
AAA,2013J,979672,600036,98,3
AAA,2013J,979672,600036,98,3
AAA,2013J,979672,600001,104,3
AAA,2013J,979672,600029,104,9
AAA,2013J,979672,600020,108,9
AAA,2013J,979672,600029,108,8
AAA,2013J,979672,600031,108,1
AAA,2013J,979672,600007,110,2
AAA,2013J,979672,600009,110,3
AAA,2013J,979672,600039,110,2
AAA,2013J,979672,600026,123,10
AAA,2013J,979672,600035,123,2
AAA,2013J,979672,600004,128,7
AAA,2013J,979672,600005,132,3
AAA,2013J,979672,600023,132,9
AAA,2013J,979672,600035,132,7
AAA,2013J,979672,600016,138,8
AAA,2013J,979672,600011,143,5
AAA,2013J,979672,600028,145,1
AAA,2013J,979672,600002,146,5
AAA,2013J,979672,600012,146,5
AAA,2013J,979672,600015,146,3
AAA,2013J,979672,600019,156,8
AAA,2013J,979672,600005,157,2
AAA,2013J,979672,600016,157,8
AAA,2013J,979672,600008,165,5
AAA,2013J,979672,600027,165,8
AAA,2013J,979672,600031,165,2
AAA,2013J,979672,600011,167,5
AAA,2013J,979672,600021,167,3
AAA,2013J,979672,600021,187,4
AAA,2013J,979672,600026,188,10
AAA,2013J,979672,600001,191,4
AAA,2013J,979672,600016,191,8
AAA,2013J,979672,600000,207,3
AAA,2013J,979672,600017,207,8
AAA,2013J,979672,600030,207,10
AAA,2013J,979672,600000,209,10
AAA,2013J,979672,600033,209,9
AAA,2013J,979672,600038,209,10
AAA,2013J,979672,600034,210,1
AAA,2013J,979672,600031,212,8
AAA,2013J,979672,600038,212,1
AAA,2013J,979672,600005,219,5
AAA,2013J,979672,600014,219,4
AAA,2013J,979672,600016,219,9
AAA,2013J,979672,600013,220,6
AAA,2013J,979672,600035,220,3
AAA,2013J,979672,600037,220,3
AAA,2013J,979672,600003,227,7
AAA,2013J,979672,600011,227,1
AAA,2013J,979672,600018,227,2
AAA,2013J,979672,600005,230,1
AAA,2013J,979672,600009,231,5
AAA,2013J,979672,600028,231,8
AAA,2013J,979672,600012,243,1
AAA,2013J,979672,600024,243,6
AAA,2013J,979672,600005,248,4
AAA,2013J,979672,600029,248,9
AAA,2013J,979672,600021,253,7
AAA,2013J,979672,600031,256,9
AAA,2013J,979672,600039,256,1
AAA,2013J,979672,600005,258,3
AAA,2013J,979672,600030,258,8
AAA,2013J,979672,600019,260,1
AAA,2013J,979672,600023,260,2
AAA,2013J,979672,600034,267,10
AAA,2013J,979672,600035,267,5
AAA,2013J,996680,600002,-13,8
AAA,2013J,996680,600009,-13,5
AAA,2013J,996680,600012,-13,6
AAA,2013J,996680,600004,-12,2
AAA,2013J,996680,600014,-9,7
AAA,2013J,996680,600019,-9,5
AAA,2013J,996680,600039,-9,8
AAA,2013J,996680,600009,8,10
AAA,2013J,996680,600017,8,4
AAA,2013J,996680,600030,8,2
AAA,2013J,996680,600027,12,5
AAA,2013J,996680,600036,12,1
AAA,2013J,996680,600000,15,4
AAA,2013J,996680,600003,32,8
AAA,2013J,996680,600006,32,5
AAA,2013J,996680,600031,32,3
AAA,2013J,996680,600004,34,9
AAA,2013J,996680,600033,34,4
AAA,2013J,996680,600008,41,1
AAA,2013J,996680,600009,41,4
AAA,2013J,996680,600026,41,3
AAA,2013J,996680,600003,45,9
AAA,2013J,996680,600029,45,5
AAA,2013J,996680,600017,46,10
AAA,2013J,996680,600020,46,1
AAA,2013J,996680,600012,50,9
AAA,2013J,996680,600022,50,4
AAA,2013J,996680,600028,50,5
AAA,2013J,996680,600039,53,9
AAA,2013J,996680,600025,60,7
AAA,2013J,996680,600001,73,2
AAA,2013J,996680,600024,73,5
AAA,2013J,996680,600012,89,4
AAA,2013J,996680,600027,95,10
AAA,2013J,996680,600035,95,8
AAA,2013J,996680,600004,102,3
AAA,2013J,996680,600014,102,3
AAA,2013J,996680,600018,102,10
AAA,2013J,996680,600005,108,4
AAA,2013J,996680,600037,108,8
AAA,2013J,996680,600007,124,9
AAA,2013J,996680,600008,124,5
AAA,2013J,996680,600009,124,10
AAA,2013J,996680,600017,139,2
AAA,2013J,996680,600038,139,7
AAA,2013J,996680,600039,139,8
AAA,2013J,1025888,600029,-5,8
AAA,2013J,1025888,600022,-1,7
AAA,2013J,1025888,600031,-1,3
AAA,2013J,1025888,600039,-1,9
AAA,2013J,1025888,600012,8,9
AAA,2013J,1025888,600033,11,1
AAA,2013J,1025888,600036,11,6
AAA,2013J,1025888,600001,14,10
AAA,2013J,1025888,600024,14,8
AAA,2013J,1025888,600033,27,9
AAA,2013J,1025888,600023,36,7
AAA,2013J,1025888,600002,40,4
AAA,2013J,1025888,600010,40,7
AAA,2013J,1025888,600000,42,10
AAA,2013J,1025888,600032,42,7
AAA,2013J,1025888,600039,42,4
AAA,2013J,1025888,600014,46,8
AAA,2013J,1025888,600028,46,3
AAA,2013J,1025888,600004,54,7
AAA,2013J,1025888,600022,54,1
AAA,2013J,1025888,600034,78,9
AAA,2013J,1025888,600003,91,4
AAA,2013J,1025888,600031,91,2
AAA,2013J,1025888,600038,95,7
AAA,2013J,1025888,600011,102,7
AAA,2013J,1025888,600030,102,4
AAA,2013J,1025888,600001,109,6
AAA,2013J,1025888,600016,109,1
AAA,2013J,1025888,600031,109,5
AAA,2013J,1025888,600018,125,3
AAA,2013J,1025888,600020,125,7
AAA,2013J,1025888,600025,125,10
AAA,2013J,1025888,600014,127,1
AAA,2013J,1025888,600000,130,1
AAA,2013J,1025888,600012,130,5
AAA,2013J,1025888,600017,130,10
AAA,2013J,1025888,600032,133,3
AAA,2013J,1025888,600014,143,6
AAA,2013J,1025888,600037,144,8
AAA,2013J,1025888,600012,157,7
AAA,2013J,1025888,600010,159,4
AAA,2013J,1025888,600036,159,2
AAA,2013J,1025888,600037,159,6
AAA,2013J,1025888,600031,171,2
AAA,2013J,1025888,600002,172,3
AAA,2013J,1025888,600010,172,2
AAA,2013J,1025888,600030,172,3
AAA,2013J,1025888,600008,176,1
AAA,2013J,1025888,600012,176,9
AAA,2013J,1025888,600038,176,6
AAA,2013J,1025888,600032,180,2
AAA,2013J,1025888,600033,180,1
AAA,2013J,1025888,600033,180,1
AAA,2013J,1025888,600000,185,8
AAA,2013J,1025888,600013,185,10
AAA,2013J,1025888,600011,187,3
AAA,2013J,1025888,600017,187,1
AAA,2013J,1025888,600025,187,8
AAA,2013J,1025888,600009,201,3
AAA,2013J,1025888,600023,201,6
AAA,2013J,1025888,600026,201,6
AAA,2013J,1025888,600003,202,3
AAA,2013J,1025888,600014,202,6
AAA,2013J,1025888,600019,202,2
AAA,2013J,1025888,600002,203,1
AAA,2013J,1025888,600030,206,6
AAA,2013J,1025888,600034,206,7
AAA,2013J,1025888,600006,218,10
AAA,2013J,1025888,600029,218,9
AAA,2013J,1025888,600017,222,1
AAA,2013J,1025888,600018,222,5
AAA,2013J,1025888,600016,242,5
AAA,2013J,1025888,600008,250,3
AAA,2013J,1025888,600024,250,5
AAA,2013J,1025888,600027,250,8
AAA,2013J,1025888,600026,265,4
AAA,2013J,1025888,600036,265,8
AAA,2013J,1025888,600020,267,9
AAA,2013J,1036928,600011,-3,4
AAA,2013J,1036928,600012,-3,9
AAA,2013J,1036928,600000,1,9
AAA,2013J,1036928,600007,1,5
AAA,2013J,1036928,600000,5,6
AAA,2013J,1036928,600018,5,5
AAA,2013J,1036928,600026,5,8
AAA,2013J,1036928,600000,6,10
AAA,2013J,1036928,600009,6,2
AAA,2013J,1036928,600039,6,9
AAA,2013J,1036928,600015,14,10
AAA,2013J,1036928,600018,14,1
AAA,2013J,1036928,600033,14,9
AAA,2013J,1036928,600000,21,8
AAA,2013J,1036928,600000,21,8
AAA,2013J,1036928,600023,21,9
AAA,2013J,1036928,600023,34,2
AAA,2013J,1036928,600037,34,6
AAA,2013J,1036928,600016,35,7
AAA,2013J,1036928,600033,35,1
AAA,2013J,1036928,600009,45,2
AAA,2013J,1036928,600017,45,8
AAA,2013J,1036928,600026,48,5
AAA,2013J,1036928,600030,48,5
AAA,2013J,1036928,600035,48,6
AAA,2013J,1036928,600018,54,3
AAA,2013J,1036928,600002,64,1
AAA,2013J,1036928,600008,64,8
AAA,2013J,1036928,600013,64,10
AAA,2013J,1036928,600022,90,8
AAA,2013J,1036928,600026,90,4
AAA,2013J,1036928,600031,90,5
AAA,2013J,1036928,600008,92,2
AAA,2013J,1036928,600009,107,2
AAA,2013J,1036928,600025,107,3
AAA,2013J,1036928,600034,107,5
AAA,2013J,1036928,600034,108,4
AAA,2013J,1036928,600011,109,5
AAA,2013J,1036928,600021,109,4
AAA,2013J,1036928,600035,109,5
AAA,2013J,1036928,600022,110,9
AAA,2013J,1036928,600028,110,6
AAA,2013J,1036928,600033,110,2
AAA,2013J,1036928,600006,114,10
AAA,2013J,1036928,600020,114,5
AAA,2013J,1036928,600007,117,4
AAA,2013J,1036928,600018,117,10
AAA,2013J,1036928,600039,117,2
AAA,2013J,1036928,600020,118,2
AAA,2013J,1036928,600034,118,8
AAA,2013J,1036928,600014,128,2
AAA,2013J,1036928,600021,128,5
AAA,2013J,1036928,600038,128,9
AAA,2013J,1036928,600007,129,3
AAA,2013J,1036928,600008,129,10
AAA,2013J,1036928,600035,129,2
AAA,2013J,1036928,600009,132,7
AAA,2013J,1036928,600035,134,4
AAA,2013J,1036928,600018,141,7
AAA,2013J,1036928,600026,141,7
AAA,2013J,1036928,600001,143,2
AAA,2013J,1036928,600017,144,9
AAA,2013J,1036928,600021,144,1
AAA,2013J,1036928,600016,145,2
AAA,2013J,1036928,600016,145,5
AAA,2013J,1036928,600015,148,9
AAA,2013J,1036928,600017,148,8
AAA,2013J,1036928,600036,148,2
AAA,2013J,1036928,600006,153,6
AAA,2013J,1036928,600025,153,2
AAA,2013J,1036928,600007,158,4
AAA,2013J,1036928,600030,158,1
AAA,2013J,1036928,600032,158,6
AAA,2013J,1036928,600025,174,3
AAA,2013J,1036928,600023,177,10
AAA,2013J,1036928,600023,177,2
AAA,2013J,1036928,600016,182,4
AAA,2013J,1036928,600006,190,9
AAA,2013J,1036928,600014,201,5
AAA,2013J,1036928,600027,201,2
AAA,2013J,1036928,600011,209,3
AAA,2013J,1036928,600002,218,1
AAA,2013J,1036928,600030,218,4
AAA,2013J,1036928,600022,225,3
AAA,2013J,1036928,600027,227,5
AAA,2013J,1036928,600033,227,6
AAA,2013J,1036928,600035,228,8
AAA,2013J,1036928,600029,253,6
AAA,2013J,1036928,600028,255,3
AAA,2013J,1036928,600007,261,7
AAA,2013J,1036928,600037,261,6
AAA,2013J,1036928,600000,264,2
AAA,2013J,1036928,600015,264,10
AAA,2013J,1036928,600034,264,9
AAA,2013J,1043146,600014,-9,2
AAA,2013J,1043146,600023,-9,9
AAA,2013J,1043146,600008,3,10
AAA,2013J,1043146,600009,3,4
AAA,2013J,1043146,600010,5,9
AAA,2013J,1043146,600028,5,8
AAA,2013J,1043146,600034,5,6
AAA,2013J,1043146,600002,18,1
AAA,2013J,1043146,600020,18,10
AAA,2013J,1043146,600022,23,8
AAA,2013J,1043146,600028,23,2
AAA,2013J,1043146,600034,23,10
AAA,2013J,1043146,600030,26,9
AAA,2013J,1043146,600032,26,3
AAA,2013J,1043146,600023,34,4
AAA,2013J,1043146,600032,34,9
AAA,2013J,1043146,600034,41,1
AAA,2013J,1043146,600039,41,2
AAA,2013J,1043146,600009,61,3
AAA,2013J,1043146,600010,62,3
AAA,2013J,1043146,600001,70,9
AAA,2013J,1043146,600019,70,2
AAA,2013J,1043146,600022,70,8
AAA,2013J,1043146,600004,76,2
AAA,2013J,1043146,600036,76,9
AAA,2013J,1043146,600038,76,4
AAA,2013J,1043146,600020,78,9
AAA,2013J,1043146,600001,82,4
AAA,2013J,1043146,600022,82,6
AAA,2013J,1043146,600000,83,9
AAA,2013J,1043146,600035,83,4
AAA,2013J,1043146,600021,86,3
AAA,2013J,1043146,600002,93,7
AAA,2013J,1043146,600014,94,9
AAA,2013J,1043146,600037,94,2
AAA,2013J,1043146,600008,96,6
AAA,2013J,1043146,600016,104,7
AAA,2013J,1043146,600025,104,2
AAA,2013J,1043146,600038,104,5
AAA,2013J,1043146,600005,114,6
AAA,2013J,1043146,600016,121,7
AAA,2013J,1043146,600036,121,6
AAA,2013J,1043146,600003,124,5
AAA,2013J,1043146,600011,124,4
AAA,2013J,1043146,600039,129,8
AAA,2013J,1043146,600009,140,4
AAA,2013J,1043146,600000,141,8
AAA,2013J,1043146,600005,141,6
AAA,2013J,1043146,600026,143,3
AAA,2013J,1043146,600022,147,5
AAA,2013J,1043146,600003,155,7
AAA,2013J,1043146,600016,155,1
AAA,2013J,1043146,600007,157,7
AAA,2013J,1043146,600021,162,4
AAA,2013J,1043146,600002,163,2
AAA,2013J,1043146,600031,163,3
AAA,2013J,1043146,600000,165,9
AAA,2013J,1043146,600002,165,5
AAA,2013J,1043146,600006,165,7
AAA,2013J,1043146,600000,168,9
AAA,2013J,1043146,600020,169,10
AAA,2013J,1043146,600023,169,1
AAA,2013J,1043146,600025,174,5
AAA,2013J,1043146,600003,183,8
AAA,2013J,1043146,600009,183,2
AAA,2013J,1043146,600029,183,8
AAA,2013J,1043146,600029,184,2
AAA,2013J,1043146,600025,188,4
AAA,2013J,1043146,600032,194,9
AAA,2013J,1043146,600037,194,9
AAA,2013J,1043146,600038,194,8
AAA,2013J,1043146,600000,218,10
AAA,2013J,1043146,600003,218,3
AAA,2013J,1043146,600017,218,9
AAA,2013J,1043146,600007,226,2
AAA,2013J,1043146,600000,232,3
AAA,2013J,1043146,600023,232,7
AAA,2013J,1043146,600009,236,5
AAA,2013J,1043146,600012,236,8
AAA,2013J,1043146,600028,236,7
AAA,2013J,1043146,600007,242,9
AAA,2013J,1043146,600035,242,6
AAA,2013J,1043146,600009,245,2
AAA,2013J,1043146,600009,245,6
AAA,2013J,1043146,600030,245,6
AAA,2013J,1043146,600011,252,6
AAA,2013J,1043146,600020,252,9
AAA,2013J,1043146,600013,265,3
AAA,2013J,1043146,600020,265,5
AAA,2013J,1077949,600012,-13,1
AAA,2013J,1077949,600013,-13,1
AAA,2013J,1077949,600017,17,7
AAA,2013J,1077949,600016,29,10
AAA,2013J,1077949,600018,36,2
AAA,2013J,1077949,600006,37,9
AAA,2013J,1077949,600022,37,1
AAA,2013J,1077949,600036,37,5
AAA,2013J,1077949,600002,41,1
AAA,2013J,1077949,600028,41,2
AAA,2013J,1077949,600018,48,10
AAA,2013J,1077949,600000,57,2
AAA,2013J,1077949,600034,57,8
AAA,2013J,1077949,600036,57,6
AAA,2013J,1077949,600003,58,10
AAA,2013J,1077949,600019,58,3
AAA,2013J,1077949,600022,58,8
AAA,2013J,1077949,600004,59,1
AAA,2013J,1077949,600012,59,1
AAA,2013J,1077949,600011,70,5
AAA,2013J,1077949,600012,70,5
AAA,2013J,1077949,600005,75,7
AAA,2013J,1077949,600010,75,5
AAA,2013J,1077949,600018,75,10
AAA,2013J,1077949,600008,79,9
AAA,2013J,1077949,600017,79,4
AAA,2013J,1077949,600020,80,9
AAA,2013J,1077949,600009,92,8
AAA,2013J,1077949,600004,106,1
AAA,2013J,1077949,600016,106,2
AAA,2013J,1077949,600018,106,1
AAA,2013J,1077949,600004,111,8
AAA,2013J,1077949,600026,112,2
AAA,2013J,1077949,600025,119,5
AAA,2013J,1077949,600010,142,4
AAA,2013J,1077949,600017,142,9
AAA,2013J,1077949,600034,142,9
AAA,2013J,1077949,600000,145,10
AAA,2013J,1077949,600002,145,5
AAA,2013J,1077949,600035,145,3
AAA,2013J,1077949,600003,162,7
AAA,2013J,1077949,600004,177,6
AAA,2013J,1077949,600023,177,6
AAA,2013J,1077949,600019,191,6
AAA,2013J,1077949,600036,191,4
AAA,2013J,1077949,600008,198,7
AAA,2013J,1077949,600023,198,8
AAA,2013J,1077949,600023,203,2
AAA,2013J,1077949,600026,203,1
AAA,2013J,1077949,600033,203,10
AAA,2013J,1077949,600028,207,10
AAA,2013J,1077949,600024,210,10
AAA,2013J,1077949,600004,212,2
AAA,2013J,1077949,600006,212,6
AAA,2013J,1077949,600031,212,9
AAA,2013J,1077949,600014,213,7
AAA,2013J,1077949,600032,213,8
AAA,2013J,1077949,600039,213,5
AAA,2013J,1077949,600018,220,6
AAA,2013J,1077949,600025,234,3
AAA,2013J,1077949,600004,236,3
AAA,2013J,1077949,600017,236,4
AAA,2013J,1077949,600018,236,3
AAA,2013J,1077949,600020,245,3
AAA,2013J,1077949,600027,245,10
AAA,2013J,1077949,600033,245,1
AAA,2013J,1077949,600010,254,8
AAA,2013J,1077949,600016,254,1
AAA,2013J,1077949,600031,254,5
AAA,2013J,1077949,600017,266,9
AAA,2013J,1077949,600018,266,6
AAA,2013J,1094458,600014,-12,2
AAA,2013J,1094458,600024,-12,4
AAA,2013J,1094458,600015,-3,6
AAA,2013J,1094458,600016,-3,5
AAA,2013J,1094458,600002,4,1
AAA,2013J,1094458,600022,4,5
AAA,2013J,1094458,600028,4,3
AAA,2013J,1094458,600008,13,7
AAA,2013J,1094458,600000,22,10
AAA,2013J,1094458,600009,22,8
AAA,2013J,1094458,600028,22,8
AAA,2013J,1094458,600034,23,5
AAA,2013J,1094458,600035,23,4
AAA,2013J,1094458,600038,23,7
AAA,2013J,1094458,600015,33,1
AAA,2013J,1094458,600037,33,10
AAA,2013J,1094458,600037,33,10
AAA,2013J,1094458,600026,41,10
AAA,2013J,1094458,600001,43,6
AAA,2013J,1094458,600018,43,10
AAA,2013J,1094458,600018,45,5
AAA,2013J,1094458,600008,56,1
AAA,2013J,1094458,600011,56,7
AAA,2013J,1094458,600018,61,1
AAA,2013J,1094458,600003,64,3
AAA,2013J,1094458,600014,64,1
AAA,2013J,1094458,600022,68,10
AAA,2013J,1094458,600032,68,7
AAA,2013J,1094458,600012,77,2
AAA,2013J,1094458,600032,77,7
AAA,2013J,1094458,600033,77,10
AAA,2013J,1094458,600013,81,4
AAA,2013J,1094458,600025,81,6
AAA,2013J,1094458,600011,87,7
AAA,2013J,1094458,600020,87,6
AAA,2013J,1094458,600010,99,1
AAA,2013J,1094458,600004,100,5
AAA,2013J,1094458,600035,105,5
AAA,2013J,1094458,600001,115,6
AAA,2013J,1094458,600021,115,1
AAA,2013J,1094458,600032,115,1
AAA,2013J,1094458,600008,118,9
AAA,2013J,1094458,600033,118,5
AAA,2013J,1094458,600029,125,5
AAA,2013J,1094458,600026,130,3
AAA,2013J,1094458,600002,134,8
AAA,2013J,1094458,600005,134,2
AAA,2013J,1094458,600010,145,9
AAA,2013J,1094458,600019,145,6
AAA,2013J,1094458,600035,145,8
AAA,2013J,1094458,600012,150,5
AAA,2013J,1094458,600034,150,8
AAA,2013J,1094458,600038,172,1
AAA,2013J,1094458,600029,177,4
AAA,2013J,1094458,600015,179,6
AAA,2013J,1094458,600017,179,9
AAA,2013J,1094458,600012,186,3
AAA,2013J,1094458,600033,186,7
AAA,2013J,1094458,600034,186,9
AAA,2013J,1094458,600000,193,4
AAA,2013J,1094458,600001,196,4
AAA,2013J,1094458,600028,196,7
AAA,2013J,1094458,600038,200,2
AAA,2013J,1094458,600039,200,10
AAA,2013J,1094458,600021,206,7
AAA,2013J,1094458,600006,209,6
AAA,2013J,1094458,600038,209,1
AAA,2013J,1094458,600013,214,1
AAA,2013J,1094458,600023,214,1
AAA,2013J,1094458,600002,224,1
AAA,2013J,1094458,600005,224,2
AAA,2013J,1094458,600007,225,9
AAA,2013J,1094458,600016,225,1
AAA,2013J,1094458,600032,240,1
AAA,2013J,1094458,600034,240,4
AAA,2013J,1094458,600019,241,10
AAA,2013J,1094458,600024,241,10
AAA,2013J,1094458,600026,241,8
AAA,2013J,1094458,600022,242,9
AAA,2013J,1094458,600037,242,9
AAA,2013J,1094458,600014,248,3
AAA,2013J,1094458,600028,248,4
AAA,2013J,1094458,600008,262,9
AAA,2013J,1111750,600008,-14,6
AAA,2013J,1111750,600026,-14,8
AAA,2013J,1111750,600007,-13,10
AAA,2013J,1111750,600027,-13,2
AAA,2013J,1111750,600028,-13,4
AAA,2013J,1111750,600012,-6,7
AAA,2013J,1111750,600019,-1,3
AAA,2013J,1111750,600028,-1,4
AAA,2013J,1111750,600030,-1,2
AAA,2013J,1111750,600004,3,9
AAA,2013J,1111750,600007,3,7
AAA,2013J,1111750,600026,8,10
AAA,2013J,1111750,600035,12,10
AAA,2013J,1111750,600035,12,5
AAA,2013J,1111750,600037,12,6
AAA,2013J,1111750,600008,20,8
AAA,2013J,1111750,600013,20,8
AAA,2013J,1111750,600028,20,10
AAA,2013J,1111750,600010,45,9
AAA,2013J,1111750,600013,45,2
AAA,2013J,1111750,600038,45,7
AAA,2013J,1111750,600006,48,4
AAA,2013J,1111750,600021,48,3
AAA,2013J,1111750,600038,48,1
AAA,2013J,1111750,600000,50,2
AAA,2013J,1111750,600039,50,9
AAA,2013J,1111750,600012,56,7
AAA,2013J,1111750,600016,56,5
AAA,2013J,1111750,600031,56,10
AAA,2013J,1111750,600019,69,1
AAA,2013J,1111750,600001,71,5
AAA,2013J,1111750,600008,71,2
AAA,2013J,1111750,600015,71,8
AAA,2013J,1111750,600003,72,10
AAA,2013J,1111750,600029,72,3
AAA,2013J,1111750,600000,79,3
AAA,2013J,1111750,600003,79,1
AAA,2013J,1111750,600019,79,2
AAA,2013J,1111750,600003,91,6
AAA,2013J,1111750,600026,91,7
AAA,2013J,1111750,600035,91,6
AAA,2013J,1111750,600010,101,1
AAA,2013J,1111750,600013,101,8
AAA,2013J,1111750,600017,101,5
AAA,2013J,1111750,600027,105,4
AAA,2013J,1111750,600007,120,10
AAA,2013J,1111750,600003,128,5
AAA,2013J,1111750,600035,128,8
AAA,2013J,1111750,600000,132,3
AAA,2013J,1111750,600008,132,1
AAA,2013J,1111750,600035,132,3
AAA,2013J,1111750,600004,138,9
AAA,2013J,1111750,600019,138,9
AAA,2013J,1111750,600038,139,4
AAA,2013J,1111750,600028,140,5
AAA,2013J,1111750,600034,140,9
AAA,2013J,1111750,600038,140,7
AAA,2013J,1111750,600007,155,6
AAA,2013J,1111750,600014,155,5
AAA,2013J,1111750,600016,155,7
AAA,2013J,1111750,600031,156,9
AAA,2013J,1111750,600003,166,5
AAA,2013J,1111750,600017,166,4
AAA,2013J,1111750,600031,166,8
AAA,2013J,1111750,600018,168,2
AAA,2013J,1111750,600020,168,6
AAA,2013J,1111750,600013,170,7
AAA,2013J,1111750,600027,170,8
AAA,2013J,1111750,600031,170,1
AAA,2013J,1111750,600025,175,4
AAA,2013J,1111750,600018,188,4
AAA,2013J,1111750,600028,188,9
AAA,2013J,1111750,600038,188,6
AAA,2013J,1111750,600005,195,6
AAA,2013J,1111750,600022,195,1
AAA,2013J,1111750,600023,195,2
AAA,2013J,1111750,600006,200,8
AAA,2013J,1111750,600011,200,7
AAA,2013J,1111750,600033,200,2
AAA,2013J,1111750,600009,203,7
AAA,2013J,1111750,600011,203,6
AAA,2013J,1111750,600028,211,5
AAA,2013J,1111750,600001,215,10
AAA,2013J,1111750,600026,215,1
AAA,2013J,1111750,600038,215,1
AAA,2013J,1111750,600003,219,1
AAA,2013J,1111750,600032,219,2
AAA,2013J,1111750,600001,224,1
AAA,2013J,1111750,600002,224,8
AAA,2013J,1111750,600038,224,7
AAA,2013J,1111750,600022,231,7
AAA,2013J,1111750,600007,233,1
AAA,2013J,1111750,600028,233,2
AAA,2013J,1111750,600015,242,1
AAA,2013J,1111750,600017,242,5
AAA,2013J,1111750,600028,242,9
AAA,2013J,1111750,600001,244,9
AAA,2013J,1111750,600012,244,8
AAA,2013J,1111750,600018,244,10
AAA,2013J,1111750,600003,255,4
AAA,2013J,1111750,600014,255,8
AAA,2013J,1111750,600001,262,8
AAA,2013J,1111750,600011,262,6
AAA,2013J,1111750,600013,262,8
AAA,2013J,1111750,600012,263,2
AAA,2013J,1111750,600027,263,6
AAA,2013J,1111750,600038,263,2
AAA,2013J,1162251,600035,-6,7
AAA,2013J,1162251,600008,-2,4
AAA,2013J,1162251,600021,-2,10
AAA,2013J,1162251,600021,-2,1
AAA,2013J,1162251,600003,0,3
AAA,2013J,1162251,600006,0,9
AAA,2013J,1162251,600025,0,6
AAA,2013J,1162251,600017,6,2
AAA,2013J,1162251,600032,7,9
AAA,2013J,1162251,600038,7,2
AAA,2013J,1162251,600006,17,1
AAA,2013J,1162251,600014,17,3
AAA,2013J,1162251,600020,17,4
AAA,2013J,1162251,600004,23,9
AAA,2013J,1162251,600000,26,6
AAA,2013J,1162251,600035,26,8
AAA,2013J,1162251,600038,26,6
AAA,2013J,1162251,600008,43,7
AAA,2013J,1162251,600022,49,1
AAA,2013J,1162251,600020,53,5
AAA,2013J,1162251,600030,53,9
AAA,2013J,1162251,600020,55,8
AAA,2013J,1162251,600022,55,2
AAA,2013J,1162251,600008,61,3
AAA,2013J,1162251,600007,84,3
AAA,2013J,1162251,600001,89,8
AAA,2013J,1162251,600036,89,2
AAA,2013J,1162251,600007,95,1
AAA,2013J,1162251,600009,95,10
AAA,2013J,1162251,600016,95,3
AAA,2013J,1162251,600006,101,7
AAA,2013J,1162251,600006,102,4
AAA,2013J,1162251,600010,104,5
AAA,2013J,1162251,600001,108,2
AAA,2013J,1162251,600020,108,8
AAA,2013J,1162251,600031,108,4
AAA,2013J,1162251,600009,121,6
AAA,2013J,1162251,600034,121,1
AAA,2013J,1162251,600039,121,5
AAA,2013J,1162251,600013,123,8
AAA,2013J,1162251,600017,123,9
AAA,2013J,1162251,600000,128,10
AAA,2013J,1162251,600009,128,1
AAA,2013J,1162251,600031,128,6
AAA,2013J,1162251,600019,131,9
AAA,2013J,1162251,600008,136,4
AAA,2013J,1162251,600029,136,3
AAA,2013J,1162251,600007,138,6
AAA,2013J,1162251,600016,138,8
AAA,2013J,1162251,600021,138,10
AAA,2013J,1162251,600017,142,1
AAA,2013J,1162251,600019,142,4
AAA,2013J,1162251,600025,142,8
AAA,2013J,1162251,600036,145,3
AAA,2013J,1162251,600015,147,4
AAA,2013J,1162251,600033,147,4
AAA,2013J,1162251,600019,148,5
AAA,2013J,1162251,600023,148,5
AAA,2013J,1162251,600001,150,10
AAA,2013J,1162251,600012,150,7
AAA,2013J,1162251,600024,160,8
AAA,2013J,1162251,600036,160,8
AAA,2013J,1162251,600019,163,5
AAA,2013J,1162251,600024,163,2
AAA,2013J,1162251,600023,164,1
AAA,2013J,1162251,600011,165,5
AAA,2013J,1162251,600035,165,3
AAA,2013J,1162251,600029,175,1
AAA,2013J,1162251,600013,176,6
AAA,2013J,1162251,600015,176,6
AAA,2013J,1162251,600022,184,3
AAA,2013J,1162251,600024,184,10
AAA,2013J,1162251,600010,192,3
AAA,2013J,1162251,600016,192,8
AAA,2013J,1162251,600037,192,7
AAA,2013J,1162251,600008,197,3
AAA,2013J,1162251,600009,197,7
AAA,2013J,1162251,600032,197,9
AAA,2013J,1162251,600014,199,7
AAA,2013J,1162251,600010,202,2
AAA,2013J,1162251,600019,202,1
AAA,2013J,1162251,600039,206,9
AAA,2013J,1162251,600013,213,4
AAA,2013J,1162251,600006,217,4
AAA,2013J,1162251,600015,220,6
AAA,2013J,1162251,600034,220,6
AAA,2013J,1162251,600034,223,2
AAA,2013J,1162251,600036,223,10
AAA,2013J,1162251,600006,238,5
AAA,2013J,1162251,600007,245,5
AAA,2013J,1162251,600021,252,3
AAA,2013J,1162251,600029,252,1
AAA,2013J,1162251,600009,254,1
AAA,2013J,1162251,600034,256,2
AAA,2013J,1162251,600034,258,3
AAA,2013J,1162251,600015,265,2
AAA,2013J,1162251,600026,265,10
AAA,2013J,1219308,600019,-11,9
AAA,2013J,1219308,600022,-11,5
AAA,2013J,1219308,600038,-11,6
AAA,2013J,1219308,600029,11,1
AAA,2013J,1219308,600005,19,6
AAA,2013J,1219308,600024,19,5
AAA,2013J,1219308,600037,19,3
AAA,2013J,1219308,600008,21,7
AAA,2013J,1219308,600009,21,10
AAA,2013J,1219308,600017,21,10
AAA,2013J,1219308,600023,23,10
AAA,2013J,1219308,600023,23,3
AAA,2013J,1219308,600032,23,6
AAA,2013J,1219308,600015,29,3
AAA,2013J,1219308,600022,39,9
AAA,2013J,1219308,600001,46,5
AAA,2013J,1219308,600007,65,5
AAA,2013J,1219308,600013,65,2
AAA,2013J,1219308,600019,65,2
AAA,2013J,1219308,600018,69,9
AAA,2013J,1219308,600025,72,3
AAA,2013J,1219308,600013,75,7
AAA,2013J,1219308,600031,75,1
AAA,2013J,1219308,600014,79,2
AAA,2013J,1219308,600004,86,4
AAA,2013J,1219308,600007,86,1
AAA,2013J,1219308,600037,86,9
AAA,2013J,1219308,600005,91,4
AAA,2013J,1219308,600004,94,5
AAA,2013J,1219308,600007,94,10
AAA,2013J,1219308,600008,94,5
AAA,2013J,1219308,600004,114,8
AAA,2013J,1219308,600034,114,3
AAA,2013J,1219308,600036,118,4
AAA,2013J,1219308,600018,120,8
AAA,2013J,1219308,600037,120,6
AAA,2013J,1219308,600024,127,7
AAA,2013J,1219308,600034,127,8
AAA,2013J,1219308,600000,131,7
AAA,2013J,1219308,600012,131,9
AAA,2013J,1219308,600008,145,1
AAA,2013J,1219308,600005,155,7
AAA,2013J,1219308,600039,155,9
AAA,2013J,1219308,600020,156,8
AAA,2013J,1219308,600003,160,8
AAA,2013J,1219308,600027,160,6
AAA,2013J,1219308,600007,164,8
AAA,2013J,1219308,600021,164,3
AAA,2013J,1219308,600031,164,2
AAA,2013J,1219308,600019,172,10
AAA,2013J,1219308,600028,172,6
AAA,2013J,1219308,600003,173,6
AAA,2013J,1219308,600022,173,5
AAA,2013J,1219308,600030,173,3
AAA,2013J,1219308,600038,182,7
AAA,2013J,1219308,600025,183,5
AAA,2013J,1219308,600008,192,10
AAA,2013J,1219308,600012,194,3
AAA,2013J,1219308,600014,194,2
AAA,2013J,1219308,600038,194,4
AAA,2013J,1219308,600002,197,2
AAA,2013J,1219308,600002,197,4
AAA,2013J,1219308,600030,197,8
AAA,2013J,1219308,600004,202,5
AAA,2013J,1219308,600023,202,2
AAA,2013J,1219308,600039,202,9
AAA,2013J,1219308,600005,203,8
AAA,2013J,1219308,600006,203,8
AAA,2013J,1219308,600010,203,6
AAA,2013J,1219308,600004,205,10
AAA,2013J,1219308,600013,205,8
AAA,2013J,1219308,600029,205,9
AAA,2013J,1219308,600006,216,4
AAA,2013J,1219308,600021,216,6
AAA,2013J,1219308,600038,216,4
AAA,2013J,1219308,600006,229,4
AAA,2013J,1219308,600019,229,9
AAA,2013J,1219308,600021,229,5
AAA,2013J,1219308,600021,231,1
AAA,2013J,1219308,600034,231,10
AAA,2013J,1219308,600034,231,8
AAA,2013J,1219308,600012,234,9
AAA,2013J,1219308,600019,245,8
AAA,2013J,1219308,600038,245,10
AAA,2013J,1219308,600003,251,4
AAA,2013J,1219308,600016,251,3
AAA,2013J,1219308,600024,251,3
AAA,2013J,1219308,600011,253,6
AAA,2013J,1219308,600029,266,8
AAA,2013J,1329285,600029,-14,6
AAA,2013J,1329285,600013,-12,9
AAA,2013J,1329285,600037,-12,10
AAA,2013J,1329285,600017,-9,2
AAA,2013J,1329285,600021,-9,6
AAA,2013J,1329285,600039,-9,6
AAA,2013J,1329285,600014,-7,10
AAA,2013J,1329285,600024,-7,1
AAA,2013J,1329285,600038,-7,7
AAA,2013J,1329285,600018,-6,3
AAA,2013J,1329285,600030,-6,8
AAA,2013J,1329285,600033,-6,7
AAA,2013J,1329285,600008,5,1
AAA,2013J,1329285,600015,7,2
AAA,2013J,1329285,600021,7,8
AAA,2013J,1329285,600034,7,5
AAA,2013J,1329285,600005,13,2
AAA,2013J,1329285,600010,13,2
AAA,2013J,1329285,600016,13,6
AAA,2013J,1329285,600003,25,8
AAA,2013J,1329285,600015,25,9
AAA,2013J,1329285,600026,25,6
AAA,2013J,1329285,600018,27,5
AAA,2013J,1329285,600025,27,2
AAA,2013J,1329285,600039,27,10
AAA,2013J,1329285,600014,36,9
AAA,2013J,1329285,600013,40,6
AAA,2013J,1329285,600015,40,2
AAA,2013J,1329285,600038,40,9
AAA,2013J,1329285,600001,42,9
AAA,2013J,1329285,600022,42,1
AAA,2013J,1329285,600037,42,7
AAA,2013J,1329285,600003,44,1
AAA,2013J,1329285,600009,44,2
AAA,2013J,1329285,600014,54,10
AAA,2013J,1329285,600019,54,3
AAA,2013J,1329285,600026,54,7
AAA,2013J,1329285,600016,71,8
AAA,2013J,1329285,600039,71,5
AAA,2013J,1329285,600012,79,1
AAA,2013J,1329285,600039,79,2
AAA,2013J,1329285,600008,83,4
AAA,2013J,1329285,600009,83,5
AAA,2013J,1329285,600003,86,8
AAA,2013J,1329285,600000,87,2
AAA,2013J,1329285,600008,87,8
AAA,2013J,1329285,600014,91,6
AAA,2013J,1329285,600024,91,1
AAA,2013J,1329285,600020,104,2
AAA,2013J,1329285,600025,104,9
AAA,2013J,1329285,600003,113,2
AAA,2013J,1329285,600038,113,9
AAA,2013J,1329285,600010,152,2
AAA,2013J,1329285,600012,152,7
AAA,2013J,1329285,600026,152,7
AAA,2013J,1329285,600009,166,8
AAA,2013J,1329285,600028,166,1
AAA,2013J,1329285,600030,166,5
AAA,2013J,1329285,600036,171,7
AAA,2013J,1329285,600006,185,2
AAA,2013J,1329285,600008,185,3
AAA,2013J,1329285,600031,185,9
AAA,2013J,1329285,600024,196,3
AAA,2013J,1329285,600025,196,2
AAA,2013J,1329285,600009,202,2
AAA,2013J,1329285,600014,202,6
AAA,2013J,1329285,600019,202,2
AAA,2013J,1329285,600003,204,3
AAA,2013J,1329285,600006,209,2
AAA,2013J,1329285,600020,209,6
AAA,2013J,1329285,600030,209,5
AAA,2013J,1329285,600008,216,3
AAA,2013J,1329285,600025,216,7
AAA,2013J,1329285,600004,217,9
AAA,2013J,1329285,600024,217,3
AAA,2013J,1329285,600028,217,10
AAA,2013J,1329285,600039,221,1
AAA,2013J,1329285,600023,231,4
AAA,2013J,1329285,600013,240,7
AAA,2013J,1329285,600015,240,8
AAA,2013J,1329285,600034,240,8
AAA,2013J,1329285,600024,242,3
AAA,2013J,1329285,600002,243,3
AAA,2013J,1329285,600024,243,8
AAA,2013J,1329285,600027,243,8
AAA,2013J,1329285,600010,246,1
AAA,2013J,1329285,600014,248,5
AAA,2013J,1329285,600027,248,5
AAA,2013J,1329285,600037,248,1
AAA,2013J,1329285,600001,254,3
AAA,2013J,1329285,600028,254,9
AAA,2013J,1329285,600029,254,9
AAA,2013J,1329285,600038,265,5
AAA,2013J,1329846,600003,-13,1
AAA,2013J,1329846,600016,-9,9
AAA,2013J,1329846,600006,-1,10
AAA,2013J,1329846,600036,-1,6
AAA,2013J,1329846,600022,8,7
AAA,2013J,1329846,600007,12,9
AAA,2013J,1329846,600009,12,9
AAA,2013J,1329846,600013,12,2
AAA,2013J,1329846,600006,17,8
AAA,2013J,1329846,600018,17,2
AAA,2013J,1329846,600034,17,4
AAA,2013J,1329846,600006,22,9
AAA,2013J,1329846,600027,22,9
AAA,2013J,1329846,600028,22,1
AAA,2013J,1329846,600000,28,2
AAA,2013J,1329846,600006,28,6
AAA,2013J,1329846,600010,28,6
AAA,2013J,1329846,600034,30,3
AAA,2013J,1329846,600014,32,9
AAA,2013J,1329846,600023,32,10
AAA,2013J,1329846,600030,32,2
AAA,2013J,1329846,600007,34,6
AAA,2013J,1329846,600032,34,7
AAA,2013J,1329846,600036,34,9
AAA,2013J,1329846,600017,35,4
AAA,2013J,1329846,600019,35,2
AAA,2013J,1329846,600033,35,2
AAA,2013J,1329846,600014,37,7
AAA,2013J,1329846,600021,37,2
AAA,2013J,1329846,600026,37,4
AAA,2013J,1329846,600022,38,3
AAA,2013J,1329846,600028,38,7
AAA,2013J,1329846,600005,39,1
AAA,2013J,1329846,600004,46,8
AAA,2013J,1329846,600012,59,7
AAA,2013J,1329846,600018,59,9
AAA,2013J,1329846,600000,63,5
AAA,2013J,1329846,600019,63,9
AAA,2013J,1329846,600003,72,5
AAA,2013J,1329846,600002,74,2
AAA,2013J,1329846,600003,74,2
AAA,2013J,1329846,600029,74,2
AAA,2013J,1329846,600003,84,8
AAA,2013J,1329846,600011,84,8
AAA,2013J,1329846,600033,84,2
AAA,2013J,1329846,600001,102,10
AAA,2013J,1329846,600001,102,10
AAA,2013J,1329846,600012,102,9
AAA,2013J,1329846,600014,103,9
AAA,2013J,1329846,600021,104,3
AAA,2013J,1329846,600035,104,6
AAA,2013J,1329846,600017,106,7
AAA,2013J,1329846,600037,106,1
AAA,2013J,1329846,600015,107,1
AAA,2013J,1329846,600005,117,3
AAA,2013J,1329846,600034,117,3
AAA,2013J,1329846,600013,126,2
AAA,2013J,1329846,600023,126,4
AAA,2013J,1329846,600036,126,8
AAA,2013J,1329846,600030,133,5
AAA,2013J,1329846,600004,137,5
AAA,2013J,1329846,600008,138,10
AAA,2013J,1329846,600014,138,10
AAA,2013J,1329846,600023,138,10
AAA,2013J,1329846,600026,151,2
AAA,2013J,1329846,600021,152,10
AAA,2013J,1329846,600003,154,3
AAA,2013J,1329846,600010,154,4
AAA,2013J,1329846,600039,155,6
AAA,2013J,1329846,600007,158,7
AAA,2013J,1329846,600009,158,7
AAA,2013J,1372954,600022,-13,3
AAA,2013J,1372954,600031,-13,1
AAA,2013J,1372954,600005,-2,2
AAA,2013J,1372954,600025,-2,2
AAA,2013J,1372954,600006,5,5
AAA,2013J,1372954,600010,5,3
AAA,2013J,1372954,600020,16,2
AAA,2013J,1372954,600030,16,4
AAA,2013J,1372954,600037,16,2
AAA,2013J,1372954,600008,24,10
AAA,2013J,1372954,600011,24,5
AAA,2013J,1372954,600036,24,5
AAA,2013J,1372954,600012,29,5
AAA,2013J,1372954,600025,29,10
AAA,2013J,1372954,600018,37,2
AAA,2013J,1372954,600035,37,7
AAA,2013J,1372954,600018,41,2
AAA,2013J,1372954,600023,41,3
AAA,2013J,1372954,600026,41,6
AAA,2013J,1372954,600006,45,4
AAA,2013J,1372954,600034,45,3
AAA,2013J,1372954,600038,45,5
AAA,2013J,1372954,600038,48,3
AAA,2013J,1372954,600007,53,3
AAA,2013J,1372954,600030,53,8
AAA,2013J,1372954,600014,59,8
AAA,2013J,1372954,600002,101,9
AAA,2013J,1372954,600011,101,1
AAA,2013J,1372954,600003,119,8
AAA,2013J,1372954,600018,119,4
AAA,2013J,1372954,600020,119,2
AAA,2013J,1372954,600013,127,6
AAA,2013J,1372954,600011,129,1
AAA,2013J,1372954,600017,129,8
AAA,2013J,1372954,600036,129,4
AAA,2013J,1372954,600011,131,3
AAA,2013J,1372954,600036,131,5
AAA,2013J,1372954,600037,131,10
AAA,2013J,1372954,600017,135,4
AAA,2013J,1372954,600020,135,2
AAA,2013J,1372954,600026,135,1
AAA,2013J,1372954,600012,136,7
AAA,2013J,1372954,600019,136,3
AAA,2013J,1372954,600038,136,9
AAA,2013J,1372954,600029,139,4
AAA,2013J,1372954,600023,149,6
AAA,2013J,1372954,600039,149,2
AAA,2013J,1372954,600005,154,4
AAA,2013J,1372954,600014,162,9
AAA,2013J,1372954,600017,162,7
AAA,2013J,1372954,600023,162,2
AAA,2013J,1372954,600011,169,8
AAA,2013J,1372954,600004,170,8
AAA,2013J,1372954,600026,170,2
AAA,2013J,1372954,600038,170,4
AAA,2013J,1372954,600000,173,8
AAA,2013J,1372954,600033,173,1
AAA,2013J,1372954,600009,192,6
AAA,2013J,1372954,600006,213,8
AAA,2013J,1372954,600005,221,3
AAA,2013J,1372954,600014,221,6
AAA,2013J,1372954,600016,221,2
AAA,2013J,1372954,600012,226,3
AAA,2013J,1372954,600008,239,1
AAA,2013J,1372954,600003,244,3
AAA,2013J,1372954,600022,246,1
AAA,2013J,1372954,600011,250,1
AAA,2013J,1372954,600026,251,9
AAA,2013J,1372954,600000,263,3
AAA,2013J,1372954,600021,263,10
AAA,2013J,1372954,600008,265,7
AAA,2013J,1372954,600031,265,7
AAA,2013J,1372954,600003,267,6
AAA,2013J,1372954,600034,267,2
AAA,2013J,1399552,600027,-12,2
AAA,2013J,1399552,600032,-12,1
AAA,2013J,1399552,600025,5,4
AAA,2013J,1399552,600026,5,3
AAA,2013J,1399552,600038,5,8
AAA,2013J,1399552,600032,17,7
AAA,2013J,1399552,600021,24,1
AAA,2013J,1399552,600024,25,8
AAA,2013J,1399552,600033,25,1
AAA,2013J,1399552,600015,34,8
AAA,2013J,1399552,600019,34,5
AAA,2013J,1399552,600005,38,7
AAA,2013J,1399552,600020,39,1
AAA,2013J,1399552,600022,39,6
AAA,2013J,1399552,600031,39,8
AAA,2013J,1399552,600002,40,9
AAA,2013J,1399552,600015,40,8
AAA,2013J,1399552,600020,40,8
AAA,2013J,1399552,600013,41,8
AAA,2013J,1399552,600013,41,10
AAA,2013J,1399552,600016,41,4
AAA,2013J,1399552,600004,53,3
AAA,2013J,1399552,600009,53,6
AAA,2013J,1399552,600019,53,5
AAA,2013J,1399552,600018,54,4
AAA,2013J,1399552,600028,54,6
AAA,2013J,1399552,600014,58,5
AAA,2013J,1399552,600027,58,1
AAA,2013J,1399552,600007,59,4
AAA,2013J,1399552,600011,59,2
AAA,2013J,1399552,600023,59,2
AAA,2013J,1399552,600021,62,3
AAA,2013J,1399552,600026,62,5
AAA,2013J,1399552,600026,74,8
AAA,2013J,1399552,600024,76,7
AAA,2013J,1399552,600027,76,4
AAA,2013J,1399552,600000,82,2
AAA,2013J,1399552,600020,82,5
AAA,2013J,1399552,600033,82,1
AAA,2013J,1399552,600031,85,8
AAA,2013J,1399552,600019,90,5
AAA,2013J,1399552,600021,90,5
AAA,2013J,1399552,600034,90,4
AAA,2013J,1399552,600012,98,3
AAA,2013J,1399552,600020,98,2
AAA,2013J,1399552,600038,103,8
AAA,2013J,1399552,600031,119,3
AAA,2013J,1399552,600024,132,9
AAA,2013J,1399552,600025,132,8
AAA,2013J,1399552,600030,132,9
AAA,2013J,1399552,600018,133,3
AAA,2013J,1399552,600037,133,9
AAA,2013J,1399552,600013,135,4
AAA,2013J,1399552,600030,135,1
AAA,2013J,1399552,600036,135,8
AAA,2013J,1399552,600031,136,4
AAA,2013J,1399552,600020,143,4
AAA,2013J,1399552,600022,143,6
AAA,2013J,1399552,600038,148,6
AAA,2013J,1399552,600005,149,8
AAA,2013J,1399552,600012,156,6
AAA,2013J,1399552,600032,156,9
AAA,2013J,1399552,600025,163,10
AAA,2013J,1399552,600024,177,4
AAA,2013J,1399552,600039,181,10
AAA,2013J,1399552,600006,185,7
AAA,2013J,1399552,600023,185,4
AAA,2013J,1399552,600036,185,10
AAA,2013J,1399552,600023,186,4
AAA,2013J,1399552,600030,188,1
AAA,2013J,1399552,600004,206,8
AAA,2013J,1399552,600023,206,6
AAA,2013J,1399552,600025,206,6
AAA,2013J,1399552,600001,226,8
AAA,2013J,1399552,600003,226,8
AAA,2013J,1399552,600012,231,4
AAA,2013J,1399552,600018,231,7
AAA,2013J,1399552,600039,231,1
AAA,2013J,1399552,600020,234,7
AAA,2013J,1399552,600037,234,7
AAA,2013J,1399552,600022,235,8
AAA,2013J,1399552,600002,246,6
AAA,2013J,1399552,600021,246,5
AAA,2013J,1399552,600036,246,6
AAA,2013J,1399552,600004,257,6
AAA,2013J,1399552,600019,257,9
AAA,2013J,1399552,600010,262,1
AAA,2013J,1399552,600025,262,10
AAA,2013J,1399552,600035,262,7
AAA,2013J,1399552,600006,264,9
AAA,2013J,1399552,600039,264,7
AAA,2013J,1399552,600039,264,9
AAA,2013J,1422659,600030,-12,7
AAA,2013J,1422659,600011,15,10
AAA,2013J,1422659,600014,15,3
AAA,2013J,1422659,600003,18,1
AAA,2013J,1422659,600004,18,2
AAA,2013J,1422659,600019,18,10
AAA,2013J,1422659,600008,21,9
AAA,2013J,1422659,600021,21,2
AAA,2013J,1422659,600027,21,2
AAA,2013J,1422659,600002,23,9
AAA,2013J,1422659,600002,23,6
AAA,2013J,1422659,600004,23,1
AAA,2013J,1422659,600003,32,3
AAA,2013J,1422659,600012,32,9
AAA,2013J,1422659,600013,32,8
AAA,2013J,1422659,600009,35,8
AAA,2013J,1422659,600001,43,3
AAA,2013J,1422659,600031,43,9
AAA,2013J,1422659,600003,45,4
AAA,2013J,1422659,600028,45,10
AAA,2013J,1422659,600033,45,8
AAA,2013J,1422659,600001,47,2
AAA,2013J,1422659,600012,47,5
AAA,2013J,1422659,600030,47,2
AAA,2013J,1422659,600005,53,5
AAA,2013J,1422659,600005,53,4
AAA,2013J,1422659,600038,53,9
AAA,2013J,1422659,600006,61,3
AAA,2013J,1422659,600023,61,6
AAA,2013J,1422659,600035,61,5
AAA,2013J,1422659,600013,68,6
AAA,2013J,1422659,600017,68,1
AAA,2013J,1422659,600039,68,10
AAA,2013J,1422659,600007,70,3
AAA,2013J,1422659,600016,70,7
AAA,2013J,1422659,600009,74,3
AAA,2013J,1422659,600012,74,2
AAA,2013J,1422659,600001,87,7
AAA,2013J,1422659,600003,91,1
AAA,2013J,1422659,600005,91,1
AAA,2013J,1422659,600018,98,3
AAA,2013J,1422659,600033,98,1
AAA,2013J,1422659,600000,104,4
AAA,2013J,1422659,600023,110,2
AAA,2013J,1422659,600025,110,5
AAA,2013J,1422659,600039,110,9
AAA,2013J,1422659,600000,117,9
AAA,2013J,1422659,600000,117,8
AAA,2013J,1422659,600019,118,6
AAA,2013J,1422659,600025,118,9
AAA,2013J,1422659,600021,120,1
AAA,2013J,1422659,600022,120,9
AAA,2013J,1422659,600022,120,9
AAA,2013J,1422659,600035,124,3
AAA,2013J,1422659,600001,127,8
AAA,2013J,1422659,600020,127,2
AAA,2013J,1422659,600022,133,4
AAA,2013J,1422659,600034,133,5
AAA,2013J,1422659,600001,139,9
AAA,2013J,1422659,600015,139,8
AAA,2013J,1422659,600002,142,5
AAA,2013J,1422659,600024,142,2
AAA,2013J,1422659,600034,142,10
AAA,2013J,1422659,600006,145,9
AAA,2013J,1422659,600008,145,8
AAA,2013J,1422659,600026,153,1
AAA,2013J,1422659,600000,155,9
AAA,2013J,1422659,600003,155,8
AAA,2013J,1422659,600039,155,6
AAA,2013J,1422659,600009,158,8
AAA,2013J,1422659,600022,158,1
AAA,2013J,1422659,600027,158,7
AAA,2013J,1422659,600016,161,9
AAA,2013J,1422659,600022,161,5
AAA,2013J,1422659,600031,161,6
AAA,2013J,1422659,600034,164,9
AAA,2013J,1422659,600026,171,7
AAA,2013J,1422659,600018,176,3
AAA,2013J,1422659,600000,180,8
AAA,2013J,1422659,600038,180,1
AAA,2013J,1422659,600012,188,2
AAA,2013J,1422659,600009,193,2
AAA,2013J,1422659,600017,193,2
AAA,2013J,1422659,600014,197,1
AAA,2013J,1422659,600025,197,6
AAA,2013J,1422659,600034,197,5
AAA,2013J,1422659,600017,203,3
AAA,2013J,1422659,600023,203,7
AAA,2013J,1422659,600025,203,1
AAA,2013J,1422659,600034,219,7
AAA,2013J,1422659,600025,222,10
AAA,2013J,1422659,600027,222,4
AAA,2013J,1422659,600004,223,2
AAA,2013J,1422659,600023,223,7
AAA,2013J,1422659,600027,223,7
AAA,2013J,1422659,600005,229,4
AAA,2013J,1422659,600012,229,4
AAA,2013J,1422659,600027,229,8
AAA,2013J,1422659,600008,239,6
AAA,2013J,1422659,600013,239,6
AAA,2013J,1422659,600011,242,1
AAA,2013J,1422659,600015,242,1
AAA,2013J,1422659,600029,242,8
AAA,2013J,1422659,600010,250,8
AAA,2013J,1422659,600028,250,7
AAA,2013J,1422659,600003,257,2
AAA,2013J,1422659,600011,257,9
AAA,2013J,1422659,600036,257,5
AAA,2013J,1422659,600002,258,3
AAA,2013J,1422659,600017,258,3
AAA,2013J,1422659,600031,258,7
AAA,2013J,1422659,600017,261,2
AAA,2013J,1439507,600000,-12,4
AAA,2013J,1439507,600018,-12,7
AAA,2013J,1439507,600009,-8,1
AAA,2013J,1439507,600024,-8,5
AAA,2013J,1439507,600028,-8,3
AAA,2013J,1439507,600007,4,3
AAA,2013J,1439507,600025,4,3
AAA,2013J,1439507,600005,5,2
AAA,2013J,1439507,600030,5,9
AAA,2013J,1439507,600033,5,1
AAA,2013J,1439507,600004,10,8
AAA,2013J,1439507,600012,10,5
AAA,2013J,1439507,600024,10,6
AAA,2013J,1439507,600005,11,8
AAA,2013J,1439507,600026,11,8
AAA,2013J,1439507,600001,15,10
AAA,2013J,1439507,600035,15,6
AAA,2013J,1439507,600000,21,5
AAA,2013J,1439507,600020,21,8
AAA,2013J,1439507,600029,21,4
AAA,2013J,1439507,600037,24,10
AAA,2013J,1439507,600018,27,7
AAA,2013J,1439507,600020,27,4
AAA,2013J,1439507,600032,27,4
AAA,2013J,1439507,600016,31,8
AAA,2013J,1439507,600018,35,2
AAA,2013J,1439507,600033,37,10
AAA,2013J,1439507,600007,41,5
AAA,2013J,1439507,600026,41,6
AAA,2013J,1439507,600012,48,9
AAA,2013J,1439507,600025,48,5
AAA,2013J,1439507,600012,52,1
AAA,2013J,1439507,600015,52,6
AAA,2013J,1439507,600021,52,9
AAA,2013J,1439507,600031,63,2
AAA,2013J,1439507,600036,63,2
AAA,2013J,1439507,600001,74,7
AAA,2013J,1439507,600020,74,3
AAA,2013J,1439507,600038,74,4
AAA,2013J,1439507,600008,77,2
AAA,2013J,1439507,600024,77,10
AAA,2013J,1439507,600024,81,5
AAA,2013J,1439507,600029,81,5
AAA,2013J,1439507,600036,81,6
AAA,2013J,1439507,600002,86,8
AAA,2013J,1439507,600017,86,2
AAA,2013J,1439507,600004,90,10
AAA,2013J,1439507,600011,90,7
AAA,2013J,1439507,600021,110,5
AAA,2013J,1439507,600024,114,1
AAA,2013J,1439507,600017,117,10
AAA,2013J,1439507,600021,117,4
AAA,2013J,1439507,600011,122,5
AAA,2013J,1439507,600030,122,10
AAA,2013J,1439507,600001,129,1
AAA,2013J,1439507,600007,129,1
AAA,2013J,1439507,600030,129,3
AAA,2013J,1439507,600018,132,5
AAA,2013J,1439507,600002,134,7
AAA,2013J,1439507,600008,178,10
AAA,2013J,1439507,600008,178,1
AAA,2013J,1439507,600023,178,2
AAA,2013J,1439507,600024,185,5
AAA,2013J,1439507,600001,188,1
AAA,2013J,1439507,600008,188,6
AAA,2013J,1439507,600012,188,7
AAA,2013J,1439507,600001,190,10
AAA,2013J,1439507,600007,190,2
AAA,2013J,1439507,600014,190,10
AAA,2013J,1439507,600033,195,3
AAA,2013J,1439507,600019,205,1
AAA,2013J,1439507,600020,205,1
AAA,2013J,1439507,600019,211,10
AAA,2013J,1439507,600025,211,7
AAA,2013J,1439507,600019,216,10
AAA,2013J,1439507,600022,218,7
AAA,2013J,1439507,600022,218,10
AAA,2013J,1439507,600033,218,1
AAA,2013J,1439507,600005,235,4
AAA,2013J,1439507,600026,235,10
AAA,2013J,1439507,600026,235,7
AAA,2013J,1439507,600004,242,3
AAA,2013J,1439507,600029,242,9
AAA,2013J,1439507,600017,251,5
AAA,2013J,1439507,600027,251,4
AAA,2013J,1439507,600018,262,9
AAA,2013J,1439507,600020,262,4
AAA,2013J,1439507,600023,262,3
AAA,2013J,1439507,600011,263,7
AAA,2013J,1524857,600005,-14,3
AAA,2013J,1524857,600038,-14,2
AAA,2013J,1524857,600010,-9,10
AAA,2013J,1524857,600026,-9,2
AAA,2013J,1524857,600028,-9,7
AAA,2013J,1524857,600000,-6,2
AAA,2013J,1524857,600020,-6,1
AAA,2013J,1524857,600025,-6,9
AAA,2013J,1524857,600008,5,10
AAA,2013J,1524857,600017,5,4
AAA,2013J,1524857,600015,7,2
AAA,2013J,1524857,600023,7,10
AAA,2013J,1524857,600030,7,6
AAA,2013J,1524857,600003,11,4
AAA,2013J,1524857,600024,11,4
AAA,2013J,1524857,600034,11,3
AAA,2013J,1524857,600019,31,4
AAA,2013J,1524857,600021,34,6
AAA,2013J,1524857,600005,36,5
AAA,2013J,1524857,600013,47,5
AAA,2013J,1524857,600008,53,3
AAA,2013J,1524857,600013,53,1
AAA,2013J,1524857,600037,53,2
AAA,2013J,1524857,600019,61,3
AAA,2013J,1524857,600031,61,3
AAA,2013J,1524857,600022,63,4
AAA,2013J,1524857,600000,75,5
AAA,2013J,1524857,600022,75,9
AAA,2013J,1524857,600028,79,9
AAA,2013J,1524857,600002,83,7
AAA,2013J,1524857,600008,83,10
AAA,2013J,1524857,600010,93,6
AAA,2013J,1524857,600014,102,9
AAA,2013J,1524857,600037,102,2
AAA,2013J,1524857,600013,106,2
AAA,2013J,1524857,600023,106,2
AAA,2013J,1524857,600025,106,2
AAA,2013J,1524857,600002,108,7
AAA,2013J,1524857,600019,108,4
AAA,2013J,1524857,600022,108,1
AAA,2013J,1524857,600017,117,10
AAA,2013J,1524857,600018,117,8
AAA,2013J,1524857,600038,117,10
AAA,2013J,1524857,600005,131,8
AAA,2013J,1524857,600029,133,4
AAA,2013J,1524857,600039,133,1
AAA,2013J,1524857,600002,137,2
AAA,2013J,1524857,600021,137,2
AAA,2013J,1524857,600022,137,3
AAA,2013J,1524857,600013,143,8
AAA,2013J,1524857,600011,145,6
AAA,2013J,1524857,600039,145,8
AAA,2013J,1524857,600028,152,6
AAA,2013J,1524857,600007,153,2
AAA,2013J,1524857,600027,153,7
AAA,2013J,1524857,600022,156,9
AAA,2013J,1524857,600022,156,7
AAA,2013J,1524857,600024,156,3
AAA,2013J,1524857,600014,160,2
AAA,2013J,1524857,600035,160,9
AAA,2013J,1524857,600034,164,2
AAA,2013J,1524857,600039,164,4
AAA,2013J,1524857,600010,167,7
AAA,2013J,1524857,600006,172,5
AAA,2013J,1524857,600030,172,3
AAA,2013J,1524857,600007,180,5
AAA,2013J,1524857,600023,180,9
AAA,2013J,1524857,600029,180,3
AAA,2013J,1524857,600005,181,7
AAA,2013J,1524857,600032,182,9
AAA,2013J,1524857,600025,197,5
AAA,2013J,1524857,600037,197,9
AAA,2013J,1524857,600016,215,8
AAA,2013J,1524857,600017,215,6
AAA,2013J,1524857,600030,215,4
AAA,2013J,1524857,600015,231,10
AAA,2013J,1524857,600028,231,5
AAA,2013J,1524857,600032,231,8
AAA,2013J,1524857,600007,238,1
AAA,2013J,1524857,600024,238,4
AAA,2013J,1524857,600036,238,8
AAA,2013J,1524857,600003,243,8
AAA,2013J,1524857,600036,243,1
AAA,2013J,1524857,600007,257,10
AAA,2013J,1524857,600009,257,4
AAA,2013J,1524857,600011,257,6
AAA,2013J,1524857,600004,259,8
AAA,2013J,1524857,600013,259,5
AAA,2013J,1524857,600014,259,5
AAA,2013J,1565732,600006,-3,9
AAA,2013J,1565732,600013,-3,5
AAA,2013J,1565732,600013,3,3
AAA,2013J,1565732,600031,3,9
AAA,2013J,1565732,600033,3,8
AAA,2013J,1565732,600027,10,8
AAA,2013J,1565732,600027,10,3
AAA,2013J,1565732,600006,13,3
AAA,2013J,1565732,600032,13,6
AAA,2013J,1565732,600035,13,7
AAA,2013J,1565732,600019,16,9
AAA,2013J,1565732,600039,30,9
AAA,2013J,1565732,600007,33,8
AAA,2013J,1565732,600009,33,2
AAA,2013J,1565732,600015,33,8
AAA,2013J,1565732,600013,37,1
AAA,2013J,1565732,600029,37,7
AAA,2013J,1565732,600036,37,5
AAA,2013J,1565732,600029,39,9
AAA,2013J,1565732,600034,39,9
AAA,2013J,1565732,600000,60,1
AAA,2013J,1565732,600026,60,2
AAA,2013J,1565732,600039,60,10
AAA,2013J,1565732,600024,69,6
AAA,2013J,1565732,600032,69,1
AAA,2013J,1565732,600037,69,1
AAA,2013J,1565732,600015,71,1
AAA,2013J,1565732,600007,72,4
AAA,2013J,1565732,600013,76,5
AAA,2013J,1565732,600021,82,9
AAA,2013J,1565732,600002,83,2
AAA,2013J,1565732,600023,94,8
AAA,2013J,1565732,600026,94,3
AAA,2013J,1565732,600034,94,3
AAA,2013J,1565732,600034,109,7
AAA,2013J,1565732,600027,111,8
AAA,2013J,1565732,600028,111,9
AAA,2013J,1565732,600032,111,10
AAA,2013J,1565732,600021,130,8
AAA,2013J,1565732,600017,139,5
AAA,2013J,1565732,600022,139,1
AAA,2013J,1565732,600000,141,10
AAA,2013J,1565732,600011,141,3
AAA,2013J,1565732,600034,146,7
AAA,2013J,1565732,600038,146,8
AAA,2013J,1565732,600001,154,8
AAA,2013J,1565732,600028,154,9
AAA,2013J,1565732,600026,161,10
AAA,2013J,1565732,600023,162,1
AAA,2013J,1565732,600025,162,3
AAA,2013J,1565732,600026,162,2
AAA,2013J,1565732,600021,168,9
AAA,2013J,1565732,600023,168,5
AAA,2013J,1565732,600036,168,6
AAA,2013J,1565732,600018,172,1
AAA,2013J,1565732,600027,172,4
AAA,2013J,1565732,600032,172,1
AAA,2013J,1565732,600002,181,5
AAA,2013J,1565732,600035,181,8
AAA,2013J,1565732,600000,183,3
AAA,2013J,1565732,600005,183,5
AAA,2013J,1565732,600014,183,1
AAA,2013J,1565732,600014,192,10
AAA,2013J,1565732,600017,192,2
AAA,2013J,1565732,600020,192,5
AAA,2013J,1565732,600030,193,7
AAA,2013J,1565732,600035,193,4
AAA,2013J,1565732,600009,233,9
AAA,2013J,1565732,600030,233,7
AAA,2013J,1565732,600008,237,8
AAA,2013J,1565732,600017,237,10
AAA,2013J,1565732,600033,237,9
AAA,2013J,1565732,600021,246,5
AAA,2013J,1565732,600004,259,2
AAA,2013J,1565732,600022,259,4
AAA,2013J,1565732,600027,259,1
AAA,2013J,1565732,600023,264,5
AAA,2013J,1565732,600035,264,8
AAA,2013J,1593805,600016,-12,4
AAA,2013J,1593805,600012,-11,6
AAA,2013J,1593805,600003,-10,2
AAA,2013J,1593805,600002,-9,1
AAA,2013J,1593805,600016,-9,2
AAA,2013J,1593805,600029,-9,1
AAA,2013J,1593805,600004,0,7
AAA,2013J,1593805,600000,3,2
AAA,2013J,1593805,600025,3,8
AAA,2013J,1593805,600026,3,5
AAA,2013J,1593805,600012,4,6
AAA,2013J,1593805,600002,8,10
AAA,2013J,1593805,600019,8,9
AAA,2013J,1593805,600012,13,4
AAA,2013J,1593805,600025,13,7
AAA,2013J,1593805,600028,13,9
AAA,2013J,1593805,600004,21,10
AAA,2013J,1593805,600018,21,2
AAA,2013J,1593805,600036,21,9
AAA,2013J,1593805,600020,23,7
AAA,2013J,1593805,600025,23,9
AAA,2013J,1593805,600005,24,8
AAA,2013J,1593805,600029,24,4
AAA,2013J,1593805,600002,25,1
AAA,2013J,1593805,600039,25,3
AAA,2013J,1593805,600029,33,9
AAA,2013J,1593805,600033,33,5
AAA,2013J,1593805,600029,46,9
AAA,2013J,1593805,600031,46,2
AAA,2013J,1593805,600005,47,1
AAA,2013J,1593805,600005,47,7
AAA,2013J,1593805,600019,47,9
AAA,2013J,1593805,600014,56,2
AAA,2013J,1593805,600027,56,2
AAA,2013J,1593805,600030,56,4
AAA,2013J,1593805,600030,71,4
AAA,2013J,1593805,600014,90,1
AAA,2013J,1593805,600031,90,9
AAA,2013J,1593805,600039,90,4
AAA,2013J,1593805,600000,94,6
AAA,2013J,1593805,600022,94,9
AAA,2013J,1593805,600035,94,1
AAA,2013J,1593805,600016,96,5
AAA,2013J,1593805,600036,109,7
AAA,2013J,1593805,600002,120,5
AAA,2013J,1593805,600006,120,4
AAA,2013J,1593805,600009,120,2
AAA,2013J,1593805,600025,122,3
AAA,2013J,1593805,600025,122,7
AAA,2013J,1593805,600033,122,7
AAA,2013J,1593805,600014,125,3
AAA,2013J,1593805,600018,125,1
AAA,2013J,1593805,600038,125,1
AAA,2013J,1593805,600037,134,4
AAA,2013J,1593805,600034,141,4
AAA,2013J,1593805,600035,141,4
AAA,2013J,1593805,600009,145,10
AAA,2013J,1593805,600024,145,10
AAA,2013J,1593805,600033,145,9
AAA,2013J,1593805,600022,146,10
AAA,2013J,1593805,600025,146,2
AAA,2013J,1593805,600029,146,9
AAA,2013J,1593805,600004,162,8
AAA,2013J,1593805,600024,162,5
AAA,2013J,1593805,600037,181,4
AAA,2013J,1593805,600029,183,10
AAA,2013J,1593805,600009,190,4
AAA,2013J,1593805,600009,190,9
AAA,2013J,1593805,600007,194,1
AAA,2013J,1593805,600029,204,7
AAA,2013J,1593805,600030,204,1
AAA,2013J,1593805,600004,211,7
AAA,2013J,1593805,600037,211,5
AAA,2013J,1593805,600014,212,7
AAA,2013J,1593805,600038,212,6
AAA,2013J,1593805,600008,215,7
AAA,2013J,1593805,600015,224,2
AAA,2013J,1593805,600009,232,6
AAA,2013J,1593805,600017,232,1
AAA,2013J,1593805,600000,251,7
AAA,2013J,1593805,600006,252,10
AAA,2013J,1593805,600011,254,9
AAA,2013J,1593805,600016,261,2
AAA,2013J,1593805,600025,261,3
AAA,2013J,1593805,600006,262,8
AAA,2013J,1593805,600019,262,10
AAA,2013J,1593805,600039,265,2
AAA,2013J,1600156,600028,-9,2
AAA,2013J,1600156,600033,-9,3
AAA,2013J,1600156,600018,1,7
AAA,2013J,1600156,600032,1,2
AAA,2013J,1600156,600005,5,10
AAA,2013J,1600156,600011,5,4
AAA,2013J,1600156,600015,5,5
AAA,2013J,1600156,600026,8,1
AAA,2013J,1600156,600025,12,10
AAA,2013J,1600156,600005,13,5
AAA,2013J,1600156,600008,13,4
AAA,2013J,1600156,600017,13,6
AAA,2013J,1600156,600027,18,4
AAA,2013J,1600156,600033,18,10
AAA,2013J,1600156,600007,21,5
AAA,2013J,1600156,600010,21,7
AAA,2013J,1600156,600029,21,8
AAA,2013J,1600156,600005,24,1
AAA,2013J,1600156,600026,24,3
AAA,2013J,1600156,600003,26,2
AAA,2013J,1600156,600025,26,8
AAA,2013J,1600156,600009,33,1
AAA,2013J,1600156,600035,33,3
AAA,2013J,1600156,600010,34,2
AAA,2013J,1600156,600010,35,8
AAA,2013J,1600156,600012,35,3
AAA,2013J,1600156,600020,35,2
AAA,2013J,1600156,600004,38,8
AAA,2013J,1600156,600037,38,7
AAA,2013J,1600156,600012,41,1
AAA,2013J,1600156,600034,41,2
AAA,2013J,1600156,600013,42,6
AAA,2013J,1600156,600028,42,5
AAA,2013J,1600156,600032,42,3
AAA,2013J,1600156,600014,45,8
AAA,2013J,1600156,600028,45,8
AAA,2013J,1600156,600021,53,8
AAA,2013J,1600156,600027,53,9
AAA,2013J,1600156,600030,53,8
AAA,2013J,1600156,600000,59,10
AAA,2013J,1600156,600002,59,8
AAA,2013J,1600156,600015,59,5
AAA,2013J,1600156,600004,63,4
AAA,2013J,1600156,600027,63,9
AAA,2013J,1600156,600036,63,10
AAA,2013J,1600156,600000,66,6
AAA,2013J,1600156,600030,66,10
AAA,2013J,1600156,600039,66,8
AAA,2013J,1600156,600014,76,6
AAA,2013J,1600156,600021,76,10
AAA,2013J,1600156,600033,76,5
AAA,2013J,1600156,600007,78,5
AAA,2013J,1600156,600017,78,6
AAA,2013J,1600156,600025,78,8
AAA,2013J,1600156,600008,83,3
AAA,2013J,1600156,600018,83,7
AAA,2013J,1600156,600039,83,7
AAA,2013J,1600156,600008,87,1
AAA,2013J,1600156,600027,87,3
AAA,2013J,1600156,600000,96,8
AAA,2013J,1600156,600010,96,1
AAA,2013J,1600156,600037,96,3
AAA,2013J,1600156,600000,97,7
AAA,2013J,1600156,600020,97,7
AAA,2013J,1600156,600021,97,4
AAA,2013J,1600156,600000,102,7
AAA,2013J,1600156,600033,102,8
AAA,2013J,1600156,600017,105,9
AAA,2013J,1600156,600010,116,3
AAA,2013J,1600156,600023,116,9
AAA,2013J,1600156,600024,119,3
AAA,2013J,1600156,600036,119,3
AAA,2013J,1600156,600039,119,6
AAA,2013J,1600156,600008,123,7
AAA,2013J,1600156,600015,123,4
AAA,2013J,1600156,600020,123,4
AAA,2013J,1600156,600038,124,6
AAA,2013J,1600156,600004,130,5
AAA,2013J,1600156,600020,130,10
AAA,2013J,1600156,600017,131,4
AAA,2013J,1600156,600036,131,3
AAA,2013J,1600156,600008,159,1
AAA,2013J,1600156,600030,159,2
AAA,2013J,1600156,600006,173,6
AAA,2013J,1600156,600008,173,10
AAA,2013J,1600156,600035,173,3
AAA,2013J,1600156,600027,174,4
AAA,2013J,1600156,600032,174,9
AAA,2013J,1600156,600037,174,6
AAA,2013J,1600156,600003,183,7
AAA,2013J,1600156,600003,183,9
AAA,2013J,1600156,600014,183,8
AAA,2013J,1600156,600012,184,9
AAA,2013J,1600156,600028,184,3
AAA,2013J,1600156,600036,184,6
AAA,2013J,1600156,600015,188,8
AAA,2013J,1600156,600016,188,1
AAA,2013J,1600156,600022,191,1
AAA,2013J,1600156,600011,192,10
AAA,2013J,1600156,600013,192,5
AAA,2013J,1600156,600038,192,3
AAA,2013J,1600156,600012,197,5
AAA,2013J,1600156,600028,212,1
AAA,2013J,1600156,600031,212,5
AAA,2013J,1600156,600036,212,3
AAA,2013J,1600156,600000,214,7
AAA,2013J,1600156,600001,214,4
AAA,2013J,1600156,600037,214,1
AAA,2013J,1600156,600009,215,8
AAA,2013J,1600156,600020,215,9
AAA,2013J,1600156,600006,225,1
AAA,2013J,1600156,600018,228,8
AAA,2013J,1600156,600026,228,9
AAA,2013J,1600156,600027,228,4
AAA,2013J,1600156,600000,242,1
AAA,2013J,1600156,600011,242,4
AAA,2013J,1600156,600030,242,9
AAA,2013J,1600156,600010,244,9
AAA,2013J,1600156,600019,244,5
AAA,2013J,1600156,600038,244,4
AAA,2013J,1600156,600016,245,1
AAA,2013J,1600156,600017,245,9
AAA,2013J,1600156,600030,245,3
AAA,2013J,1600156,600007,247,2
AAA,2013J,1600156,600005,253,1
AAA,2013J,1600156,600015,253,7
AAA,2013J,1600156,600020,253,10
AAA,2013J,1600156,600016,254,5
AAA,2013J,1600156,600032,254,9
AAA,2013J,1600156,600034,254,9
AAA,2013J,1684182,600023,-11,10
AAA,2013J,1684182,600026,-11,5
AAA,2013J,1684182,600005,-9,9
AAA,2013J,1684182,600012,-9,2
AAA,2013J,1684182,600014,-3,10
AAA,2013J,1684182,600038,2,4
AAA,2013J,1684182,600012,4,10
AAA,2013J,1684182,600038,4,1
AAA,2013J,1684182,600001,8,5
AAA,2013J,1684182,600003,8,4
AAA,2013J,1684182,600008,8,2
AAA,2013J,1684182,600025,17,6
AAA,2013J,1684182,600029,43,2
AAA,2013J,1684182,600021,48,6
AAA,2013J,1684182,600004,54,4
AAA,2013J,1684182,600010,54,5
AAA,2013J,1684182,600015,54,8
AAA,2013J,1684182,600020,75,7
AAA,2013J,1684182,600036,83,1
AAA,2013J,1684182,600022,86,3
AAA,2013J,1684182,600028,86,10
AAA,2013J,1684182,600032,86,1
AAA,2013J,1684182,600005,88,9
AAA,2013J,1684182,600008,88,7
AAA,2013J,1684182,600012,94,2
AAA,2013J,1684182,600014,94,3
AAA,2013J,1684182,600002,95,7
AAA,2013J,1684182,600033,95,10
AAA,2013J,1684182,600013,98,2
AAA,2013J,1684182,600034,98,6
AAA,2013J,1684182,600011,106,4
AAA,2013J,1684182,600001,108,10
AAA,2013J,1684182,600039,108,5
AAA,2013J,1684182,600012,111,7
AAA,2013J,1684182,600013,111,7
AAA,2013J,1684182,600006,114,8
AAA,2013J,1684182,600010,114,10
AAA,2013J,1684182,600026,114,2
AAA,2013J,1684182,600002,128,8
AAA,2013J,1684182,600014,128,10
AAA,2013J,1684182,600017,128,10
AAA,2013J,1684182,600001,133,2
AAA,2013J,1684182,600014,133,1
AAA,2013J,1684182,600026,133,4
AAA,2013J,1684182,600018,134,3
AAA,2013J,1684182,600021,134,10
AAA,2013J,1684182,600019,140,4
AAA,2013J,1684182,600023,140,8
AAA,2013J,1684182,600028,140,4
AAA,2013J,1684182,600025,144,7
AAA,2013J,1684182,600031,144,9
AAA,2013J,1684182,600033,149,4
AAA,2013J,1684182,600019,162,3
AAA,2013J,1684182,600019,162,6
AAA,2013J,1684182,600029,168,10
AAA,2013J,1684182,600006,169,9
AAA,2013J,1684182,600019,174,1
AAA,2013J,1684182,600010,176,10
AAA,2013J,1684182,600001,179,6
AAA,2013J,1684182,600027,179,8
AAA,2013J,1684182,600038,179,6
AAA,2013J,1684182,600005,180,9
AAA,2013J,1684182,600007,180,6
AAA,2013J,1684182,600025,180,5
AAA,2013J,1684182,600001,195,4
AAA,2013J,1684182,600015,196,8
AAA,2013J,1684182,600016,196,1
AAA,2013J,1684182,600025,196,8
AAA,2013J,1684182,600028,197,1
AAA,2013J,1684182,600011,216,8
AAA,2013J,1684182,600027,216,8
AAA,2013J,1684182,600030,216,7
AAA,2013J,1684182,600027,220,8
AAA,2013J,1684182,600037,220,6
AAA,2013J,1684182,600010,221,1
AAA,2013J,1684182,600011,221,7
AAA,2013J,1684182,600021,221,4
AAA,2013J,1684182,600007,225,1
AAA,2013J,1684182,600026,225,4
AAA,2013J,1684182,600036,225,3
AAA,2013J,1684182,600015,226,3
AAA,2013J,1684182,600011,242,7
AAA,2013J,1684182,600017,242,3
AAA,2013J,1684182,600023,242,5
AAA,2013J,1684182,600002,249,1
AAA,2013J,1684182,600010,249,2
AAA,2013J,1684182,600026,249,5
AAA,2013J,1684182,600026,251,4
AAA,2013J,1684182,600032,251,2
AAA,2013J,1684182,600037,251,4
AAA,2013J,1684182,600002,252,9
AAA,2013J,1684182,600030,252,8
AAA,2013J,1684182,600010,253,2
AAA,2013J,1684182,600013,253,6
AAA,2013J,1684182,600009,266,10
AAA,2013J,1684182,600031,266,8
AAA,2013J,1684182,600014,267,7
AAA,2013J,1684182,600030,267,4
AAA,2013J,1684182,600035,267,1
AAA,2013J,1929174,600001,-12,7
AAA,2013J,1929174,600013,-12,4
AAA,2013J,1929174,600036,-12,10
AAA,2013J,1929174,600009,-9,3
AAA,2013J,1929174,600014,-9,9
AAA,2013J,1929174,600017,-9,10
AAA,2013J,1929174,600031,-7,8
AAA,2013J,1929174,600038,-7,1
AAA,2013J,1929174,600006,-2,7
AAA,2013J,1929174,600006,-2,2
AAA,2013J,1929174,600009,4,2
AAA,2013J,1929174,600015,4,6
AAA,2013J,1929174,600018,9,9
AAA,2013J,1929174,600013,12,10
AAA,2013J,1929174,600018,12,7
AAA,2013J,1929174,600003,25,8
AAA,2013J,1929174,600018,35,4
AAA,2013J,1929174,600022,35,2
AAA,2013J,1929174,600000,73,6
AAA,2013J,1929174,600003,73,9
AAA,2013J,1929174,600020,73,10
AAA,2013J,1929174,600031,85,3
AAA,2013J,1929174,600003,86,8
AAA,2013J,1929174,600015,86,4
AAA,2013J,1929174,600025,86,4
AAA,2013J,1929174,600039,112,7
AAA,2013J,1929174,600010,120,7
AAA,2013J,1929174,600021,120,10
AAA,2013J,1929174,600006,130,3
AAA,2013J,1929174,600027,131,8
AAA,2013J,1929174,600029,131,3
AAA,2013J,1929174,600022,141,4
AAA,2013J,1929174,600037,141,9
AAA,2013J,1929174,600001,144,3
AAA,2013J,1929174,600008,152,5
AAA,2013J,1929174,600013,152,3
AAA,2013J,1929174,600019,152,6
AAA,2013J,1929174,600021,154,5
AAA,2013J,1929174,600005,156,2
AAA,2013J,1929174,600010,156,1
AAA,2013J,1929174,600014,156,9
AAA,2013J,1929174,600003,162,7
AAA,2013J,1929174,600020,162,8
AAA,2013J,1929174,600016,167,1
AAA,2013J,1929174,600018,171,3
AAA,2013J,1929174,600039,171,5
AAA,2013J,1929174,600015,183,9
AAA,2013J,1929174,600020,183,3
AAA,2013J,1929174,600014,197,9
AAA,2013J,1929174,600024,197,9
AAA,2013J,1929174,600026,197,5
AAA,2013J,1929174,600029,214,3
AAA,2013J,1929174,600035,214,9
AAA,2013J,1929174,600006,225,1
AAA,2013J,1929174,600022,225,9
AAA,2013J,1929174,600029,225,1
AAA,2013J,1929174,600009,239,4
AAA,2013J,1929174,600021,239,2
AAA,2013J,1929174,600036,248,10
AAA,2013J,1931014,600022,-2,6
AAA,2013J,1931014,600037,-2,4
AAA,2013J,1931014,600039,-2,7
AAA,2013J,1931014,600022,0,3
AAA,2013J,1931014,600027,0,5
AAA,2013J,1931014,600006,5,8
AAA,2013J,1931014,600026,5,1
AAA,2013J,1931014,600007,10,7
AAA,2013J,1931014,600036,10,1
AAA,2013J,1931014,600039,10,2
AAA,2013J,1931014,600007,14,4
AAA,2013J,1931014,600009,14,3
AAA,2013J,1931014,600035,14,3
AAA,2013J,1931014,600003,17,1
AAA,2013J,1931014,600038,17,4
AAA,2013J,1931014,600005,28,6
AAA,2013J,1931014,600020,28,2
AAA,2013J,1931014,600036,28,3
AAA,2013J,1931014,600022,30,4
AAA,2013J,1931014,600022,35,4
AAA,2013J,1931014,600032,35,1
AAA,2013J,1931014,600001,40,7
AAA,2013J,1931014,600013,40,8
AAA,2013J,1931014,600038,40,7
AAA,2013J,1931014,600017,59,5
AAA,2013J,1931014,600031,59,9
AAA,2013J,1931014,600021,70,6
AAA,2013J,1931014,600026,70,9
AAA,2013J,1931014,600021,75,4
AAA,2013J,1931014,600023,75,8
AAA,2013J,1931014,600036,75,1
AAA,2013J,1931014,600033,78,10
AAA,2013J,1931014,600038,78,4
AAA,2013J,1931014,600002,81,4
AAA,2013J,1931014,600018,81,1
AAA,2013J,1931014,600039,81,6
AAA,2013J,1931014,600014,95,4
AAA,2013J,1931014,600028,95,1
AAA,2013J,1931014,600022,96,2
AAA,2013J,1931014,600012,99,5
AAA,2013J,1931014,600020,99,3
AAA,2013J,1931014,600034,99,9
AAA,2013J,1931014,600000,108,2
AAA,2013J,1931014,600022,108,9
AAA,2013J,1931014,600034,108,1
AAA,2013J,1931014,600015,114,8
AAA,2013J,1931014,600021,118,7
AAA,2013J,1931014,600023,118,6
AAA,2013J,1931014,600038,118,7
AAA,2013J,1931014,600009,125,10
AAA,2013J,1931014,600016,129,6
AAA,2013J,1931014,600030,129,2
AAA,2013J,1931014,600031,131,8
AAA,2013J,1931014,600028,147,7
AAA,2013J,1931014,600003,154,1
AAA,2013J,1931014,600022,154,9
AAA,2013J,1931014,600023,154,10
AAA,2013J,1931014,600004,158,7
AAA,2013J,1931014,600030,158,2
AAA,2013J,1931014,600036,164,9
AAA,2013J,1931014,600022,172,7
AAA,2013J,1931014,600031,173,3
AAA,2013J,1931014,600034,173,10
AAA,2013J,1931014,600034,175,2
AAA,2013J,1931014,600036,175,4
AAA,2013J,1931014,600009,177,9
AAA,2013J,1931014,600015,177,7
AAA,2013J,1931014,600019,177,4
AAA,2013J,1931014,600031,180,2
AAA,2013J,1931014,600037,180,7
AAA,2013J,1931014,600000,189,10
AAA,2013J,1931014,600019,189,2
AAA,2013J,1931014,600019,189,9
AAA,2013J,1931014,600004,196,10
AAA,2013J,1931014,600026,196,2
AAA,2013J,1931014,600027,196,6
AAA,2013J,1931014,600033,197,3
AAA,2013J,1931014,600020,198,7
AAA,2013J,1931014,600028,198,10
AAA,2013J,1931014,600005,199,9
AAA,2013J,1931014,600024,199,9
AAA,2013J,1931014,600026,199,10
AAA,2013J,1984154,600002,-12,8
AAA,2013J,1984154,600004,-11,10
AAA,2013J,1984154,600011,-10,6
AAA,2013J,1984154,600027,-10,1
AAA,2013J,1984154,600030,-10,10
AAA,2013J,1984154,600001,-5,2
AAA,2013J,1984154,600019,-5,9
AAA,2013J,1984154,600019,-5,7
AAA,2013J,1984154,600013,-4,8
AAA,2013J,1984154,600026,-4,9
AAA,2013J,1984154,600008,1,3
AAA,2013J,1984154,600002,2,10
AAA,2013J,1984154,600002,6,2
AAA,2013J,1984154,600007,6,5
AAA,2013J,1984154,600029,6,1
AAA,2013J,1984154,600011,15,6
AAA,2013J,1984154,600011,15,4
AAA,2013J,1984154,600038,15,3
AAA,2013J,1984154,600023,17,3
AAA,2013J,1984154,600032,17,1
AAA,2013J,1984154,600005,22,1
AAA,2013J,1984154,600010,24,4
AAA,2013J,1984154,600010,24,8
AAA,2013J,1984154,600027,24,3
AAA,2013J,1984154,600032,28,3
AAA,2013J,1984154,600038,28,1
AAA,2013J,1984154,600022,29,2
AAA,2013J,1984154,600007,32,7
AAA,2013J,1984154,600015,32,10
AAA,2013J,1984154,600030,32,6
AAA,2013J,1984154,600033,38,3
AAA,2013J,1984154,600019,77,4
AAA,2013J,1984154,600021,77,4
AAA,2013J,1984154,600035,77,1
AAA,2013J,1984154,600007,84,4
AAA,2013J,1984154,600010,84,5
AAA,2013J,1984154,600009,112,3
AAA,2013J,1984154,600034,113,2
AAA,2013J,1984154,600005,117,2
AAA,2013J,1984154,600015,117,10
AAA,2013J,1984154,600008,120,10
AAA,2013J,1984154,600015,120,10
AAA,2013J,1984154,600038,120,4
AAA,2013J,1984154,600024,122,4
AAA,2013J,1984154,600010,135,10
AAA,2013J,1984154,600023,158,1
AAA,2013J,1984154,600029,158,9
AAA,2013J,1984154,600003,161,4
AAA,2013J,1984154,600007,161,4
AAA,2013J,1984154,600010,161,7
AAA,2013J,1984154,600016,165,10
AAA,2013J,1984154,600018,165,7
AAA,2013J,1984154,600000,171,2
AAA,2013J,1984154,600032,171,5
AAA,2013J,1984154,600037,171,5
AAA,2013J,1984154,600039,181,2
AAA,2013J,1984154,600010,190,8
AAA,2013J,1984154,600013,190,5
AAA,2013J,1984154,600019,202,2
AAA,2013J,1984154,600026,202,5
AAA,2013J,1984154,600031,202,7
AAA,2013J,1984154,600025,209,7
AAA,2013J,1984154,600032,209,10
AAA,2013J,1984154,600033,209,8
AAA,2013J,1984154,600006,212,2
AAA,2013J,1984154,600015,212,2
AAA,2013J,1984154,600016,212,5
AAA,2013J,1984154,600017,214,5
AAA,2013J,1984154,600005,231,6
AAA,2013J,1984154,600039,231,8
AAA,2013J,1984154,600039,231,3
AAA,2013J,1984154,600021,238,9
AAA,2013J,1984154,600026,238,9
AAA,2013J,1984154,600000,243,4
AAA,2013J,1984154,600020,243,2
AAA,2013J,1984154,600031,243,10
AAA,2013J,1984154,600026,245,7
AAA,2013J,1984154,600006,257,8
AAA,2013J,1984154,600023,257,2
AAA,2013J,1984154,600029,259,2
AAA,2013J,2055757,600030,-12,6
AAA,2013J,2055757,600037,-12,4
AAA,2013J,2055757,600026,-8,10
AAA,2013J,2055757,600030,-8,5
AAA,2013J,2055757,600037,-5,10
AAA,2013J,2055757,600022,7,8
AAA,2013J,2055757,600000,17,10
AAA,2013J,2055757,600007,17,2
AAA,2013J,2055757,600037,17,6
AAA,2013J,2055757,600007,27,9
AAA,2013J,2055757,600029,33,1
AAA,2013J,2055757,600030,33,3
AAA,2013J,2055757,600036,33,4
AAA,2013J,2055757,600018,44,2
AAA,2013J,2055757,600026,44,6
AAA,2013J,2055757,600035,44,4
AAA,2013J,2055757,600034,54,7
AAA,2013J,2055757,600002,55,4
AAA,2013J,2055757,600012,55,4
AAA,2013J,2055757,600019,55,10
AAA,2013J,2055757,600011,61,4
AAA,2013J,2055757,600018,61,1
AAA,2013J,2055757,600007,75,1
AAA,2013J,2055757,600014,75,4
AAA,2013J,2055757,600005,91,10
AAA,2013J,2055757,600013,91,1
AAA,2013J,2055757,600004,92,6
AAA,2013J,2055757,600009,94,1
AAA,2013J,2055757,600019,94,9
AAA,2013J,2055757,600031,94,5
AAA,2013J,2055757,600029,100,2
AAA,2013J,2055757,600002,103,1
AAA,2013J,2055757,600017,103,1
AAA,2013J,2055757,600032,103,8
AAA,2013J,2055757,600019,109,2
AAA,2013J,2055757,600028,109,9
AAA,2013J,2055757,600033,109,1
AAA,2013J,2055757,600008,124,9
AAA,2013J,2055757,600009,124,6
AAA,2013J,2055757,600017,128,6
AAA,2013J,2055757,600022,128,1
AAA,2013J,2055757,600037,128,2
AAA,2013J,2055757,600010,129,8
AAA,2013J,2055757,600032,129,5
AAA,2013J,2055757,600016,133,8
AAA,2013J,2055757,600031,133,3
AAA,2013J,2055757,600010,137,6
AAA,2013J,2055757,600006,141,7
AAA,2013J,2055757,600016,141,2
AAA,2013J,2055757,600034,154,6
AAA,2013J,2055757,600025,163,10
AAA,2013J,2055757,600026,163,8
AAA,2013J,2055757,600035,163,9
AAA,2013J,2055757,600007,165,9
AAA,2013J,2055757,600023,165,3
AAA,2013J,2055757,600026,165,1
AAA,2013J,2055757,600014,166,3
AAA,2013J,2055757,600014,166,3
AAA,2013J,2055757,600025,166,3
AAA,2013J,2055757,600029,168,6
AAA,2013J,2055757,600036,168,9
AAA,2013J,2055757,600003,171,1
AAA,2013J,2055757,600032,171,5
AAA,2013J,2055757,600000,182,3
AAA,2013J,2055757,600008,182,2
AAA,2013J,2055757,600012,182,9
AAA,2013J,2055757,600006,183,7
AAA,2013J,2055757,600029,183,4
AAA,2013J,2055757,600025,185,7
AAA,2013J,2055757,600028,185,2
AAA,2013J,2055757,600019,186,2
AAA,2013J,2055757,600027,186,10
AAA,2013J,2055757,600027,186,1
AAA,2013J,2055757,600016,189,4
AAA,2013J,2055757,600026,189,1
AAA,2013J,2055757,600000,192,7
AAA,2013J,2055757,600009,214,7
AAA,2013J,2055757,600000,216,10
AAA,2013J,2055757,600009,216,3
AAA,2013J,2055757,600017,216,7
AAA,2013J,2055757,600022,222,4
AAA,2013J,2055757,600027,222,10
AAA,2013J,2055757,600028,222,6
AAA,2013J,2055757,600000,240,7
AAA,2013J,2055757,600001,240,4
AAA,2013J,2055757,600011,240,7
AAA,2013J,2055757,600012,243,5
AAA,2013J,2055757,600027,243,5
AAA,2013J,2055757,600033,243,1
AAA,2013J,2055757,600002,249,4
AAA,2013J,2055757,600017,249,5
AAA,2013J,2055757,600028,249,10
AAA,2013J,2055757,600008,253,6
AAA,2013J,2055757,600029,253,7
AAA,2013J,2055757,600006,254,7
AAA,2013J,2055757,600007,254,7
AAA,2013J,2055757,600012,254,2
AAA,2013J,2055757,600018,258,4
AAA,2013J,2055757,600030,258,7
AAA,2013J,2055757,600039,258,10
AAA,2013J,2055757,600005,262,3
AAA,2013J,2055757,600015,266,10
AAA,2013J,2055757,600026,266,5
AAA,2013J,2055757,600033,266,3
AAA,2013J,2178466,600011,-12,4
AAA,2013J,2178466,600037,-12,9
AAA,2013J,2178466,600039,-12,7
AAA,2013J,2178466,600007,-9,1
AAA,2013J,2178466,600013,-9,5
AAA,2013J,2178466,600017,3,8
AAA,2013J,2178466,600031,3,8
AAA,2013J,2178466,600034,3,8
AAA,2013J,2178466,600003,6,3
AAA,2013J,2178466,600015,6,5
AAA,2013J,2178466,600030,6,8
AAA,2013J,2178466,600027,13,10
AAA,2013J,2178466,600036,13,1
AAA,2013J,2178466,600020,14,7
AAA,2013J,2178466,600025,14,9
AAA,2013J,2178466,600038,14,4
AAA,2013J,2178466,600029,16,2
AAA,2013J,2178466,600007,17,9
AAA,2013J,2178466,600028,20,2
AAA,2013J,2178466,600017,24,4
AAA,2013J,2178466,600028,24,4
AAA,2013J,2178466,600037,29,8
AAA,2013J,2178466,600006,33,7
AAA,2013J,2178466,600023,33,4
AAA,2013J,2178466,600027,33,2
AAA,2013J,2178466,600004,43,6
AAA,2013J,2178466,600025,43,3
AAA,2013J,2178466,600002,52,7
AAA,2013J,2178466,600016,52,1
AAA,2013J,2178466,600019,52,9
AAA,2013J,2178466,600022,55,9
AAA,2013J,2178466,600023,55,9
AAA,2013J,2178466,600035,55,8
AAA,2013J,2178466,600019,58,7
AAA,2013J,2178466,600022,58,3
AAA,2013J,2178466,600031,58,6
AAA,2013J,2178466,600007,65,3
AAA,2013J,2178466,600024,65,4
AAA,2013J,2178466,600026,65,4
AAA,2013J,2178466,600034,66,1
AAA,2013J,2178466,600004,68,6
AAA,2013J,2178466,600010,71,2
AAA,2013J,2178466,600036,71,1
AAA,2013J,2178466,600037,71,5
AAA,2013J,2178466,600001,77,2
AAA,2013J,2178466,600011,77,8
AAA,2013J,2178466,600035,77,3
AAA,2013J,2178466,600027,80,1
AAA,2013J,2178466,600029,80,6
AAA,2013J,2178466,600038,80,6
AAA,2013J,2178466,600002,82,5
AAA,2013J,2178466,600017,82,1
AAA,2013J,2178466,600024,82,7
AAA,2013J,2178466,600016,84,5
AAA,2013J,2178466,600013,85,6
AAA,2013J,2178466,600031,85,2
AAA,2013J,2178466,600001,92,5
AAA,2013J,2178466,600013,92,10
AAA,2013J,2178466,600010,118,7
AAA,2013J,2178466,600034,118,9
AAA,2013J,2178466,600037,118,2
AAA,2013J,2178466,600004,119,9
AAA,2013J,2178466,600037,119,8
AAA,2013J,2178466,600010,120,6
AAA,2013J,2178466,600026,120,9
AAA,2013J,2178466,600015,122,10
AAA,2013J,2178466,600028,125,10
AAA,2013J,2178466,600022,129,3
AAA,2013J,2178466,600025,130,5
AAA,2013J,2178466,600034,130,6
AAA,2013J,2178466,600032,133,8
AAA,2013J,2178466,600010,134,9
AAA,2013J,2178466,600019,135,1
AAA,2013J,2178466,600038,135,4
AAA,2013J,2178466,600027,142,1
AAA,2013J,2178466,600010,143,4
AAA,2013J,2178466,600037,146,10
AAA,2013J,2178466,600018,154,4
AAA,2013J,2178466,600027,154,6
AAA,2013J,2178466,600034,154,5
AAA,2013J,2178466,600019,162,9
AAA,2013J,2178466,600031,162,5
AAA,2013J,2178466,600004,170,10
AAA,2013J,2178466,600032,170,7
AAA,2013J,2178466,600033,176,7
AAA,2013J,2178466,600038,176,2
AAA,2013J,2178466,600015,178,10
AAA,2013J,2178466,600027,178,10
AAA,2013J,2178466,600034,178,8
AAA,2013J,2178466,600000,179,10
AAA,2013J,2178466,600021,179,6
AAA,2013J,2178466,600002,184,6
AAA,2013J,2178466,600006,184,9
AAA,2013J,2178466,600006,184,9
AAA,2013J,2178466,600012,187,5
AAA,2013J,2178466,600032,187,8
AAA,2013J,2178466,600039,187,8
AAA,2013J,2178466,600030,193,7
AAA,2013J,2178466,600013,194,5
AAA,2013J,2178466,600025,194,1
AAA,2013J,2178466,600007,198,10
AAA,2013J,2178466,600015,198,2
AAA,2013J,2178466,600003,204,1
AAA,2013J,2178466,600009,204,6
AAA,2013J,2178466,600037,204,7
AAA,2013J,2178466,600028,209,2
AAA,2013J,2178466,600028,209,2
AAA,2013J,2178466,600036,209,9
AAA,2013J,2178466,600000,211,9
AAA,2013J,2178466,600017,211,5
AAA,2013J,2178466,600038,211,9
AAA,2013J,2178466,600013,220,5
AAA,2013J,2178466,600018,220,6
AAA,2013J,2178466,600038,222,2
AAA,2013J,2178466,600034,239,7
AAA,2013J,2178466,600010,241,2
AAA,2013J,2178466,600011,241,8
AAA,2013J,2178466,600024,241,10
AAA,2013J,2178466,600001,262,7
AAA,2013J,2178466,600026,262,9
AAA,2013J,2178466,600027,262,4
AAA,2013J,2185923,600016,-13,4
AAA,2013J,2185923,600009,-11,3
AAA,2013J,2185923,600020,-11,4
AAA,2013J,2185923,600038,-11,7
AAA,2013J,2185923,600014,9,4
AAA,2013J,2185923,600035,25,5
AAA,2013J,2185923,600004,29,2
AAA,2013J,2185923,600011,29,3
AAA,2013J,2185923,600033,29,5
AAA,2013J,2185923,600005,30,7
AAA,2013J,2185923,600039,30,8
AAA,2013J,2185923,600020,41,4
AAA,2013J,2185923,600021,41,10
AAA,2013J,2185923,600029,41,9
AAA,2013J,2185923,600035,44,2
AAA,2013J,2185923,600020,56,7
AAA,2013J,2185923,600024,56,6
AAA,2013J,2185923,600037,56,5
AAA,2013J,2185923,600009,63,6
AAA,2013J,2185923,600018,63,5
AAA,2013J,2185923,600024,63,3
AAA,2013J,2185923,600021,71,3
AAA,2013J,2185923,600024,71,2
AAA,2013J,2185923,600036,71,5
AAA,2013J,2185923,600004,74,6
AAA,2013J,2185923,600017,74,7
AAA,2013J,2185923,600035,74,1
AAA,2013J,2185923,600014,76,7
AAA,2013J,2185923,600039,76,2
AAA,2013J,2185923,600015,77,10
AAA,2013J,2185923,600026,77,6
AAA,2013J,2185923,600033,77,1
AAA,2013J,2185923,600008,78,5
AAA,2013J,2185923,600013,78,9
AAA,2013J,2185923,600002,85,8
AAA,2013J,2185923,600038,85,9
AAA,2013J,2185923,600011,95,2
AAA,2013J,2185923,600015,109,1
AAA,2013J,2185923,600002,110,5
AAA,2013J,2185923,600023,110,9
AAA,2013J,2185923,600037,110,10
AAA,2013J,2185923,600022,124,2
AAA,2013J,2185923,600023,124,5
AAA,2013J,2185923,600023,124,10
AAA,2013J,2185923,600017,126,3
AAA,2013J,2185923,600018,126,9
AAA,2013J,2185923,600025,126,4
AAA,2013J,2185923,600020,133,8
AAA,2013J,2185923,600023,149,2
AAA,2013J,2185923,600026,149,9
AAA,2013J,2185923,600038,149,5
AAA,2013J,2185923,600019,151,2
AAA,2013J,2185923,600031,151,5
AAA,2013J,2185923,600028,152,7
AAA,2013J,2185923,600039,152,4
AAA,2013J,2185923,600026,154,1
AAA,2013J,2185923,600026,154,7
AAA,2013J,2185923,600034,154,7
AAA,2013J,2185923,600005,169,6
AAA,2013J,2185923,600014,169,3
AAA,2013J,2185923,600030,169,9
AAA,2013J,2185923,600000,174,3
AAA,2013J,2185923,600000,174,10
AAA,2013J,2185923,600007,174,4
AAA,2013J,2185923,600008,177,8
AAA,2013J,2185923,600030,177,4
AAA,2013J,2185923,600000,181,6
AAA,2013J,2185923,600027,183,7
AAA,2013J,2185923,600032,183,7
AAA,2013J,2185923,600028,184,2
AAA,2013J,2185923,600006,186,5
AAA,2013J,2185923,600013,186,9
AAA,2013J,2185923,600035,186,7
AAA,2013J,2185923,600001,204,9
AAA,2013J,2185923,600004,204,2
AAA,2013J,2185923,600030,204,4
AAA,2013J,2185923,600010,209,4
AAA,2013J,2185923,600013,210,1
AAA,2013J,2185923,600023,210,4
AAA,2013J,2185923,600000,222,8
AAA,2013J,2185923,600003,239,8
AAA,2013J,2185923,600023,239,6
AAA,2013J,2185923,600020,241,9
AAA,2013J,2185923,600022,241,3
AAA,2013J,2185923,600036,241,2
AAA,2013J,2185923,600021,243,9
AAA,2013J,2185923,600002,252,5
AAA,2013J,2185923,600026,252,5
AAA,2013J,2185923,600034,252,8
AAA,2013J,2185923,600012,258,3
AAA,2013J,2185923,600015,258,3
AAA,2013J,2185923,600036,258,3
AAA,2013J,2185923,600020,259,5
AAA,2013J,2185923,600010,263,6
AAA,2013J,2185923,600017,263,9
AAA,2013J,2190805,600005,-14,2
AAA,2013J,2190805,600007,-3,4
AAA,2013J,2190805,600009,-3,4
AAA,2013J,2190805,600001,4,9
AAA,2013J,2190805,600007,11,5
AAA,2013J,2190805,600008,11,1
AAA,2013J,2190805,600023,12,10
AAA,2013J,2190805,600034,12,2
AAA,2013J,2190805,600037,12,1
AAA,2013J,2190805,600021,20,3
AAA,2013J,2190805,600022,20,2
AAA,2013J,2190805,600026,20,4
AAA,2013J,2190805,600004,26,1
AAA,2013J,2190805,600014,26,3
AAA,2013J,2190805,600038,30,3
AAA,2013J,2190805,600003,31,10
AAA,2013J,2190805,600019,31,4
AAA,2013J,2190805,600017,47,1
AAA,2013J,2190805,600022,47,1
AAA,2013J,2190805,600011,56,8
AAA,2013J,2190805,600012,56,9
AAA,2013J,2190805,600034,56,8
AAA,2013J,2190805,600022,60,4
AAA,2013J,2190805,600031,60,9
AAA,2013J,2190805,600035,61,3
AAA,2013J,2190805,600028,65,4
AAA,2013J,2190805,600039,65,7
AAA,2013J,2190805,600010,69,7
AAA,2013J,2190805,600035,73,5
AAA,2013J,2190805,600011,77,1
AAA,2013J,2190805,600036,77,1
AAA,2013J,2190805,600032,95,8
AAA,2013J,2190805,600007,101,4
AAA,2013J,2190805,600015,101,6
AAA,2013J,2190805,600019,101,8
AAA,2013J,2190805,600006,104,6
AAA,2013J,2190805,600010,104,7
AAA,2013J,2190805,600034,104,9
AAA,2013J,2190805,600018,117,8
AAA,2013J,2190805,600031,136,7
AAA,2013J,2190805,600034,136,8
AAA,2013J,2190805,600038,138,6
AAA,2013J,2190805,600006,143,4
AAA,2013J,2190805,600015,143,8
AAA,2013J,2190805,600030,143,9
AAA,2013J,2190805,600023,146,6
AAA,2013J,2190805,600034,146,6
AAA,2013J,2190805,600039,146,10
AAA,2013J,2190805,600013,158,8
AAA,2013J,2190805,600016,158,10
AAA,2013J,2190805,600023,158,3
AAA,2013J,2190805,600000,173,3
AAA,2013J,2190805,600010,173,7
AAA,2013J,2190805,600008,192,4
AAA,2013J,2190805,600009,192,9
AAA,2013J,2190805,600012,192,7
AAA,2013J,2190805,600008,208,1
AAA,2013J,2190805,600015,208,1
AAA,2013J,2190805,600031,208,7
AAA,2013J,2190805,600019,211,6
AAA,2013J,2190805,600026,215,3
AAA,2013J,2190805,600021,216,8
AAA,2013J,2190805,600010,220,1
AAA,2013J,2190805,600021,220,2
AAA,2013J,2190805,600029,220,6
AAA,2013J,2190805,600038,226,1
AAA,2013J,2190805,600009,227,9
AAA,2013J,2190805,600037,227,10
AAA,2013J,2190805,600013,228,4
AAA,2013J,2190805,600019,231,9
AAA,2013J,2190805,600029,237,5
AAA,2013J,2190805,600029,237,3
AAA,2013J,2190805,600037,237,7
AAA,2013J,2190805,600001,239,7
AAA,2013J,2190805,600023,239,2
AAA,2013J,2190805,600037,239,7
AAA,2013J,2190805,600007,245,5
AAA,2013J,2190805,600014,245,2
AAA,2013J,2190805,600020,245,6
AAA,2013J,2190805,600013,247,2
AAA,2013J,2190805,600018,248,1
AAA,2013J,2190805,600022,248,9
AAA,2013J,2190805,600022,248,2
AAA,2013J,2190805,600012,259,6
AAA,2013J,2190805,600032,259,1
AAA,2013J,2244158,600002,-10,5
AAA,2013J,2244158,600014,-10,3
AAA,2013J,2244158,600029,-10,10
AAA,2013J,2244158,600001,-5,5
AAA,2013J,2244158,600013,-5,3
AAA,2013J,2244158,600023,-5,10
AAA,2013J,2244158,600019,5,1
AAA,2013J,2244158,600030,5,9
AAA,2013J,2244158,600035,5,3
AAA,2013J,2244158,600028,12,4
AAA,2013J,2244158,600005,20,4
AAA,2013J,2244158,600012,22,9
AAA,2013J,2244158,600019,22,7
AAA,2013J,2244158,600025,25,5
AAA,2013J,2244158,600028,25,10
AAA,2013J,2244158,600035,25,3
AAA,2013J,2244158,600004,33,8
AAA,2013J,2244158,600018,33,5
AAA,2013J,2244158,600037,33,9
AAA,2013J,2244158,600004,35,3
AAA,2013J,2244158,600010,35,4
AAA,2013J,2244158,600026,35,1
AAA,2013J,2244158,600009,36,4
AAA,2013J,2244158,600004,48,5
AAA,2013J,2244158,600012,48,2
AAA,2013J,2244158,600008,56,3
AAA,2013J,2244158,600008,58,8
AAA,2013J,2244158,600023,58,6
AAA,2013J,2244158,600015,60,8
AAA,2013J,2244158,600021,60,1
AAA,2013J,2244158,600008,74,8
AAA,2013J,2244158,600030,86,2
AAA,2013J,2244158,600031,86,6
AAA,2013J,2244158,600000,90,8
AAA,2013J,2244158,600014,90,4
AAA,2013J,2244158,600014,91,10
AAA,2013J,2244158,600038,91,5
AAA,2013J,2244158,600017,92,1
AAA,2013J,2244158,600000,107,4
AAA,2013J,2244158,600017,107,5
AAA,2013J,2244158,600005,109,3
AAA,2013J,2244158,600033,111,3
AAA,2013J,2244158,600001,113,8
AAA,2013J,2244158,600010,117,9
AAA,2013J,2244158,600017,117,2
AAA,2013J,2244158,600016,118,4
AAA,2013J,2244158,600023,118,3
AAA,2013J,2244158,600030,118,10
AAA,2013J,2244158,600002,133,10
AAA,2013J,2244158,600018,133,3
AAA,2013J,2244158,600034,133,4
AAA,2013J,2244158,600019,141,8
AAA,2013J,2244158,600024,141,8
AAA,2013J,2244158,600033,141,8
AAA,2013J,2244158,600011,142,3
AAA,2013J,2244158,600027,142,3
AAA,2013J,2244158,600011,148,1
AAA,2013J,2244158,600013,148,1
AAA,2013J,2244158,600035,151,6
AAA,2013J,2244158,600036,151,6
AAA,2013J,2244158,600037,151,4
AAA,2013J,2244158,600021,152,1
AAA,2013J,2244158,600024,152,1
AAA,2013J,2244158,600037,152,9
AAA,2013J,2244158,600017,153,6
AAA,2013J,2244158,600037,153,10
AAA,2013J,2244158,600039,153,8
AAA,2013J,2244158,600000,154,3
AAA,2013J,2244158,600007,154,6
AAA,2013J,2244158,600000,155,2
AAA,2013J,2244158,600007,155,3
AAA,2013J,2244158,600008,155,1
AAA,2013J,2244158,600004,160,1
AAA,2013J,2244158,600022,162,5
AAA,2013J,2244158,600029,162,1
AAA,2013J,2244158,600036,162,3
AAA,2013J,2244158,600016,163,6
AAA,2013J,2244158,600021,163,2
AAA,2013J,2244158,600034,163,7
AAA,2013J,2244158,600003,172,4
AAA,2013J,2244158,600038,172,1
AAA,2013J,2244158,600015,178,9
AAA,2013J,2244158,600000,186,6
AAA,2013J,2244158,600002,186,6
AAA,2013J,2244158,600029,186,1
AAA,2013J,2244158,600017,193,5
AAA,2013J,2244158,600017,193,9
AAA,2013J,2244158,600034,193,9
AAA,2013J,2244158,600006,200,9
AAA,2013J,2244158,600008,200,10
AAA,2013J,2244158,600028,220,6
AAA,2013J,2244158,600039,222,3
AAA,2013J,2244158,600005,226,2
AAA,2013J,2244158,600009,226,3
AAA,2013J,2244158,600017,226,3
AAA,2013J,2244158,600009,239,1
AAA,2013J,2244158,600038,239,8
AAA,2013J,2244158,600014,242,7
AAA,2013J,2244158,600031,242,2
AAA,2013J,2244158,600033,257,10
AAA,2013J,2244158,600037,257,6
AAA,2013J,2244158,600026,258,7
AAA,2013J,2244158,600013,260,5
AAA,2013J,2254623,600003,-11,3
)csv";

}  // namespace

const char* const kSampleCsv[7] = {
    kCourses,
    kAssessments,
    kVle,
    kStudentInfo,
    kStudentRegistration,
    kStudentAssessment,
    kStudentVle,
};

}  // namespace oulad::detail
