"""Word_Break and Extended_Pictographic range tables (generated file).

Generated by scripts/gen_wb_tables.py from the `regex` module's Unicode
database. Do not edit by hand.
"""

# class indices; 0 means Other
WB_CLASS_NAMES = ['Other', 'CR', 'LF', 'Newline', 'Extend', 'ZWJ', 'Regional_Indicator', 'Format', 'Katakana', 'Hebrew_Letter', 'ALetter', 'Single_Quote', 'Double_Quote', 'MidNumLet', 'MidLetter', 'MidNum', 'Numeric', 'ExtendNumLet', 'WSegSpace']

# sorted (start, end, class) with end exclusive; gaps are Other
WB_RANGES = [
    (0x0000A, 0x0000B, 2),
    (0x0000B, 0x0000D, 3),
    (0x0000D, 0x0000E, 1),
    (0x00020, 0x00021, 18),
    (0x00022, 0x00023, 12),
    (0x00027, 0x00028, 11),
    (0x0002C, 0x0002D, 15),
    (0x0002E, 0x0002F, 13),
    (0x00030, 0x0003A, 16),
    (0x0003A, 0x0003B, 14),
    (0x0003B, 0x0003C, 15),
    (0x00041, 0x0005B, 10),
    (0x0005F, 0x00060, 17),
    (0x00061, 0x0007B, 10),
    (0x00085, 0x00086, 3),
    (0x000AA, 0x000AB, 10),
    (0x000AD, 0x000AE, 7),
    (0x000B5, 0x000B6, 10),
    (0x000B7, 0x000B8, 14),
    (0x000B8, 0x000B9, 10),
    (0x000BA, 0x000BB, 10),
    (0x000C0, 0x000D7, 10),
    (0x000D8, 0x000F7, 10),
    (0x000F8, 0x002D8, 10),
    (0x002DE, 0x00300, 10),
    (0x00300, 0x00370, 4),
    (0x00370, 0x00375, 10),
    (0x00376, 0x00378, 10),
    (0x0037A, 0x0037E, 10),
    (0x0037E, 0x0037F, 15),
    (0x0037F, 0x00380, 10),
    (0x00386, 0x00387, 10),
    (0x00387, 0x00388, 14),
    (0x00388, 0x0038B, 10),
    (0x0038C, 0x0038D, 10),
    (0x0038E, 0x003A2, 10),
    (0x003A3, 0x003F6, 10),
    (0x003F7, 0x00482, 10),
    (0x00483, 0x0048A, 4),
    (0x0048A, 0x00530, 10),
    (0x00531, 0x00557, 10),
    (0x00559, 0x0055D, 10),
    (0x0055E, 0x0055F, 10),
    (0x0055F, 0x00560, 14),
    (0x00560, 0x00589, 10),
    (0x00589, 0x0058A, 15),
    (0x0058A, 0x0058B, 10),
    (0x00591, 0x005BE, 4),
    (0x005BF, 0x005C0, 4),
    (0x005C1, 0x005C3, 4),
    (0x005C4, 0x005C6, 4),
    (0x005C7, 0x005C8, 4),
    (0x005D0, 0x005EB, 9),
    (0x005EF, 0x005F3, 9),
    (0x005F3, 0x005F4, 10),
    (0x005F4, 0x005F5, 14),
    (0x00600, 0x00606, 16),
    (0x0060C, 0x0060E, 15),
    (0x00610, 0x0061B, 4),
    (0x0061C, 0x0061D, 7),
    (0x00620, 0x0064B, 10),
    (0x0064B, 0x00660, 4),
    (0x00660, 0x0066A, 16),
    (0x0066B, 0x0066C, 16),
    (0x0066C, 0x0066D, 15),
    (0x0066E, 0x00670, 10),
    (0x00670, 0x00671, 4),
    (0x00671, 0x006D4, 10),
    (0x006D5, 0x006D6, 10),
    (0x006D6, 0x006DD, 4),
    (0x006DD, 0x006DE, 16),
    (0x006DF, 0x006E5, 4),
    (0x006E5, 0x006E7, 10),
    (0x006E7, 0x006E9, 4),
    (0x006EA, 0x006EE, 4),
    (0x006EE, 0x006F0, 10),
    (0x006F0, 0x006FA, 16),
    (0x006FA, 0x006FD, 10),
    (0x006FF, 0x00700, 10),
    (0x0070F, 0x00711, 10),
    (0x00711, 0x00712, 4),
    (0x00712, 0x00730, 10),
    (0x00730, 0x0074B, 4),
    (0x0074D, 0x007A6, 10),
    (0x007A6, 0x007B1, 4),
    (0x007B1, 0x007B2, 10),
    (0x007C0, 0x007CA, 16),
    (0x007CA, 0x007EB, 10),
    (0x007EB, 0x007F4, 4),
    (0x007F4, 0x007F6, 10),
    (0x007F8, 0x007F9, 15),
    (0x007FA, 0x007FB, 10),
    (0x007FD, 0x007FE, 4),
    (0x00800, 0x00816, 10),
    (0x00816, 0x0081A, 4),
    (0x0081A, 0x0081B, 10),
    (0x0081B, 0x00824, 4),
    (0x00824, 0x00825, 10),
    (0x00825, 0x00828, 4),
    (0x00828, 0x00829, 10),
    (0x00829, 0x0082E, 4),
    (0x00840, 0x00859, 10),
    (0x00859, 0x0085C, 4),
    (0x00860, 0x0086B, 10),
    (0x00870, 0x00888, 10),
    (0x00889, 0x00890, 10),
    (0x00890, 0x00892, 16),
    (0x00897, 0x008A0, 4),
    (0x008A0, 0x008CA, 10),
    (0x008CA, 0x008E2, 4),
    (0x008E2, 0x008E3, 16),
    (0x008E3, 0x00904, 4),
    (0x00904, 0x0093A, 10),
    (0x0093A, 0x0093D, 4),
    (0x0093D, 0x0093E, 10),
    (0x0093E, 0x00950, 4),
    (0x00950, 0x00951, 10),
    (0x00951, 0x00958, 4),
    (0x00958, 0x00962, 10),
    (0x00962, 0x00964, 4),
    (0x00966, 0x00970, 16),
    (0x00971, 0x00981, 10),
    (0x00981, 0x00984, 4),
    (0x00985, 0x0098D, 10),
    (0x0098F, 0x00991, 10),
    (0x00993, 0x009A9, 10),
    (0x009AA, 0x009B1, 10),
    (0x009B2, 0x009B3, 10),
    (0x009B6, 0x009BA, 10),
    (0x009BC, 0x009BD, 4),
    (0x009BD, 0x009BE, 10),
    (0x009BE, 0x009C5, 4),
    (0x009C7, 0x009C9, 4),
    (0x009CB, 0x009CE, 4),
    (0x009CE, 0x009CF, 10),
    (0x009D7, 0x009D8, 4),
    (0x009DC, 0x009DE, 10),
    (0x009DF, 0x009E2, 10),
    (0x009E2, 0x009E4, 4),
    (0x009E6, 0x009F0, 16),
    (0x009F0, 0x009F2, 10),
    (0x009FC, 0x009FD, 10),
    (0x009FE, 0x009FF, 4),
    (0x00A01, 0x00A04, 4),
    (0x00A05, 0x00A0B, 10),
    (0x00A0F, 0x00A11, 10),
    (0x00A13, 0x00A29, 10),
    (0x00A2A, 0x00A31, 10),
    (0x00A32, 0x00A34, 10),
    (0x00A35, 0x00A37, 10),
    (0x00A38, 0x00A3A, 10),
    (0x00A3C, 0x00A3D, 4),
    (0x00A3E, 0x00A43, 4),
    (0x00A47, 0x00A49, 4),
    (0x00A4B, 0x00A4E, 4),
    (0x00A51, 0x00A52, 4),
    (0x00A59, 0x00A5D, 10),
    (0x00A5E, 0x00A5F, 10),
    (0x00A66, 0x00A70, 16),
    (0x00A70, 0x00A72, 4),
    (0x00A72, 0x00A75, 10),
    (0x00A75, 0x00A76, 4),
    (0x00A81, 0x00A84, 4),
    (0x00A85, 0x00A8E, 10),
    (0x00A8F, 0x00A92, 10),
    (0x00A93, 0x00AA9, 10),
    (0x00AAA, 0x00AB1, 10),
    (0x00AB2, 0x00AB4, 10),
    (0x00AB5, 0x00ABA, 10),
    (0x00ABC, 0x00ABD, 4),
    (0x00ABD, 0x00ABE, 10),
    (0x00ABE, 0x00AC6, 4),
    (0x00AC7, 0x00ACA, 4),
    (0x00ACB, 0x00ACE, 4),
    (0x00AD0, 0x00AD1, 10),
    (0x00AE0, 0x00AE2, 10),
    (0x00AE2, 0x00AE4, 4),
    (0x00AE6, 0x00AF0, 16),
    (0x00AF9, 0x00AFA, 10),
    (0x00AFA, 0x00B00, 4),
    (0x00B01, 0x00B04, 4),
    (0x00B05, 0x00B0D, 10),
    (0x00B0F, 0x00B11, 10),
    (0x00B13, 0x00B29, 10),
    (0x00B2A, 0x00B31, 10),
    (0x00B32, 0x00B34, 10),
    (0x00B35, 0x00B3A, 10),
    (0x00B3C, 0x00B3D, 4),
    (0x00B3D, 0x00B3E, 10),
    (0x00B3E, 0x00B45, 4),
    (0x00B47, 0x00B49, 4),
    (0x00B4B, 0x00B4E, 4),
    (0x00B55, 0x00B58, 4),
    (0x00B5C, 0x00B5E, 10),
    (0x00B5F, 0x00B62, 10),
    (0x00B62, 0x00B64, 4),
    (0x00B66, 0x00B70, 16),
    (0x00B71, 0x00B72, 10),
    (0x00B82, 0x00B83, 4),
    (0x00B83, 0x00B84, 10),
    (0x00B85, 0x00B8B, 10),
    (0x00B8E, 0x00B91, 10),
    (0x00B92, 0x00B96, 10),
    (0x00B99, 0x00B9B, 10),
    (0x00B9C, 0x00B9D, 10),
    (0x00B9E, 0x00BA0, 10),
    (0x00BA3, 0x00BA5, 10),
    (0x00BA8, 0x00BAB, 10),
    (0x00BAE, 0x00BBA, 10),
    (0x00BBE, 0x00BC3, 4),
    (0x00BC6, 0x00BC9, 4),
    (0x00BCA, 0x00BCE, 4),
    (0x00BD0, 0x00BD1, 10),
    (0x00BD7, 0x00BD8, 4),
    (0x00BE6, 0x00BF0, 16),
    (0x00C00, 0x00C05, 4),
    (0x00C05, 0x00C0D, 10),
    (0x00C0E, 0x00C11, 10),
    (0x00C12, 0x00C29, 10),
    (0x00C2A, 0x00C3A, 10),
    (0x00C3C, 0x00C3D, 4),
    (0x00C3D, 0x00C3E, 10),
    (0x00C3E, 0x00C45, 4),
    (0x00C46, 0x00C49, 4),
    (0x00C4A, 0x00C4E, 4),
    (0x00C55, 0x00C57, 4),
    (0x00C58, 0x00C5B, 10),
    (0x00C5C, 0x00C5E, 10),
    (0x00C60, 0x00C62, 10),
    (0x00C62, 0x00C64, 4),
    (0x00C66, 0x00C70, 16),
    (0x00C80, 0x00C81, 10),
    (0x00C81, 0x00C84, 4),
    (0x00C85, 0x00C8D, 10),
    (0x00C8E, 0x00C91, 10),
    (0x00C92, 0x00CA9, 10),
    (0x00CAA, 0x00CB4, 10),
    (0x00CB5, 0x00CBA, 10),
    (0x00CBC, 0x00CBD, 4),
    (0x00CBD, 0x00CBE, 10),
    (0x00CBE, 0x00CC5, 4),
    (0x00CC6, 0x00CC9, 4),
    (0x00CCA, 0x00CCE, 4),
    (0x00CD5, 0x00CD7, 4),
    (0x00CDC, 0x00CDF, 10),
    (0x00CE0, 0x00CE2, 10),
    (0x00CE2, 0x00CE4, 4),
    (0x00CE6, 0x00CF0, 16),
    (0x00CF1, 0x00CF3, 10),
    (0x00CF3, 0x00CF4, 4),
    (0x00D00, 0x00D04, 4),
    (0x00D04, 0x00D0D, 10),
    (0x00D0E, 0x00D11, 10),
    (0x00D12, 0x00D3B, 10),
    (0x00D3B, 0x00D3D, 4),
    (0x00D3D, 0x00D3E, 10),
    (0x00D3E, 0x00D45, 4),
    (0x00D46, 0x00D49, 4),
    (0x00D4A, 0x00D4E, 4),
    (0x00D4E, 0x00D4F, 10),
    (0x00D54, 0x00D57, 10),
    (0x00D57, 0x00D58, 4),
    (0x00D5F, 0x00D62, 10),
    (0x00D62, 0x00D64, 4),
    (0x00D66, 0x00D70, 16),
    (0x00D7A, 0x00D80, 10),
    (0x00D81, 0x00D84, 4),
    (0x00D85, 0x00D97, 10),
    (0x00D9A, 0x00DB2, 10),
    (0x00DB3, 0x00DBC, 10),
    (0x00DBD, 0x00DBE, 10),
    (0x00DC0, 0x00DC7, 10),
    (0x00DCA, 0x00DCB, 4),
    (0x00DCF, 0x00DD5, 4),
    (0x00DD6, 0x00DD7, 4),
    (0x00DD8, 0x00DE0, 4),
    (0x00DE6, 0x00DF0, 16),
    (0x00DF2, 0x00DF4, 4),
    (0x00E31, 0x00E32, 4),
    (0x00E34, 0x00E3B, 4),
    (0x00E47, 0x00E4F, 4),
    (0x00E50, 0x00E5A, 16),
    (0x00EB1, 0x00EB2, 4),
    (0x00EB4, 0x00EBD, 4),
    (0x00EC8, 0x00ECF, 4),
    (0x00ED0, 0x00EDA, 16),
    (0x00F00, 0x00F01, 10),
    (0x00F18, 0x00F1A, 4),
    (0x00F20, 0x00F2A, 16),
    (0x00F35, 0x00F36, 4),
    (0x00F37, 0x00F38, 4),
    (0x00F39, 0x00F3A, 4),
    (0x00F3E, 0x00F40, 4),
    (0x00F40, 0x00F48, 10),
    (0x00F49, 0x00F6D, 10),
    (0x00F71, 0x00F85, 4),
    (0x00F86, 0x00F88, 4),
    (0x00F88, 0x00F8D, 10),
    (0x00F8D, 0x00F98, 4),
    (0x00F99, 0x00FBD, 4),
    (0x00FC6, 0x00FC7, 4),
    (0x0102B, 0x0103F, 4),
    (0x01040, 0x0104A, 16),
    (0x01056, 0x0105A, 4),
    (0x0105E, 0x01061, 4),
    (0x01062, 0x01065, 4),
    (0x01067, 0x0106E, 4),
    (0x01071, 0x01075, 4),
    (0x01082, 0x0108E, 4),
    (0x0108F, 0x01090, 4),
    (0x01090, 0x0109A, 16),
    (0x0109A, 0x0109E, 4),
    (0x010A0, 0x010C6, 10),
    (0x010C7, 0x010C8, 10),
    (0x010CD, 0x010CE, 10),
    (0x010D0, 0x010FB, 10),
    (0x010FC, 0x01249, 10),
    (0x0124A, 0x0124E, 10),
    (0x01250, 0x01257, 10),
    (0x01258, 0x01259, 10),
    (0x0125A, 0x0125E, 10),
    (0x01260, 0x01289, 10),
    (0x0128A, 0x0128E, 10),
    (0x01290, 0x012B1, 10),
    (0x012B2, 0x012B6, 10),
    (0x012B8, 0x012BF, 10),
    (0x012C0, 0x012C1, 10),
    (0x012C2, 0x012C6, 10),
    (0x012C8, 0x012D7, 10),
    (0x012D8, 0x01311, 10),
    (0x01312, 0x01316, 10),
    (0x01318, 0x0135B, 10),
    (0x0135D, 0x01360, 4),
    (0x01380, 0x01390, 10),
    (0x013A0, 0x013F6, 10),
    (0x013F8, 0x013FE, 10),
    (0x01401, 0x0166D, 10),
    (0x0166F, 0x01680, 10),
    (0x01680, 0x01681, 18),
    (0x01681, 0x0169B, 10),
    (0x016A0, 0x016EB, 10),
    (0x016EE, 0x016F9, 10),
    (0x01700, 0x01712, 10),
    (0x01712, 0x01716, 4),
    (0x0171F, 0x01732, 10),
    (0x01732, 0x01735, 4),
    (0x01740, 0x01752, 10),
    (0x01752, 0x01754, 4),
    (0x01760, 0x0176D, 10),
    (0x0176E, 0x01771, 10),
    (0x01772, 0x01774, 4),
    (0x017B4, 0x017D4, 4),
    (0x017DD, 0x017DE, 4),
    (0x017E0, 0x017EA, 16),
    (0x0180B, 0x0180E, 4),
    (0x0180E, 0x0180F, 7),
    (0x0180F, 0x01810, 4),
    (0x01810, 0x0181A, 16),
    (0x01820, 0x01879, 10),
    (0x01880, 0x01885, 10),
    (0x01885, 0x01887, 4),
    (0x01887, 0x018A9, 10),
    (0x018A9, 0x018AA, 4),
    (0x018AA, 0x018AB, 10),
    (0x018B0, 0x018F6, 10),
    (0x01900, 0x0191F, 10),
    (0x01920, 0x0192C, 4),
    (0x01930, 0x0193C, 4),
    (0x01946, 0x01950, 16),
    (0x019D0, 0x019DB, 16),
    (0x01A00, 0x01A17, 10),
    (0x01A17, 0x01A1C, 4),
    (0x01A55, 0x01A5F, 4),
    (0x01A60, 0x01A7D, 4),
    (0x01A7F, 0x01A80, 4),
    (0x01A80, 0x01A8A, 16),
    (0x01A90, 0x01A9A, 16),
    (0x01AB0, 0x01ADE, 4),
    (0x01AE0, 0x01AEC, 4),
    (0x01B00, 0x01B05, 4),
    (0x01B05, 0x01B34, 10),
    (0x01B34, 0x01B45, 4),
    (0x01B45, 0x01B4D, 10),
    (0x01B50, 0x01B5A, 16),
    (0x01B6B, 0x01B74, 4),
    (0x01B80, 0x01B83, 4),
    (0x01B83, 0x01BA1, 10),
    (0x01BA1, 0x01BAE, 4),
    (0x01BAE, 0x01BB0, 10),
    (0x01BB0, 0x01BBA, 16),
    (0x01BBA, 0x01BE6, 10),
    (0x01BE6, 0x01BF4, 4),
    (0x01C00, 0x01C24, 10),
    (0x01C24, 0x01C38, 4),
    (0x01C40, 0x01C4A, 16),
    (0x01C4D, 0x01C50, 10),
    (0x01C50, 0x01C5A, 16),
    (0x01C5A, 0x01C7E, 10),
    (0x01C80, 0x01C8B, 10),
    (0x01C90, 0x01CBB, 10),
    (0x01CBD, 0x01CC0, 10),
    (0x01CD0, 0x01CD3, 4),
    (0x01CD4, 0x01CE9, 4),
    (0x01CE9, 0x01CED, 10),
    (0x01CED, 0x01CEE, 4),
    (0x01CEE, 0x01CF4, 10),
    (0x01CF4, 0x01CF5, 4),
    (0x01CF5, 0x01CF7, 10),
    (0x01CF7, 0x01CFA, 4),
    (0x01CFA, 0x01CFB, 10),
    (0x01D00, 0x01DC0, 10),
    (0x01DC0, 0x01E00, 4),
    (0x01E00, 0x01F16, 10),
    (0x01F18, 0x01F1E, 10),
    (0x01F20, 0x01F46, 10),
    (0x01F48, 0x01F4E, 10),
    (0x01F50, 0x01F58, 10),
    (0x01F59, 0x01F5A, 10),
    (0x01F5B, 0x01F5C, 10),
    (0x01F5D, 0x01F5E, 10),
    (0x01F5F, 0x01F7E, 10),
    (0x01F80, 0x01FB5, 10),
    (0x01FB6, 0x01FBD, 10),
    (0x01FBE, 0x01FBF, 10),
    (0x01FC2, 0x01FC5, 10),
    (0x01FC6, 0x01FCD, 10),
    (0x01FD0, 0x01FD4, 10),
    (0x01FD6, 0x01FDC, 10),
    (0x01FE0, 0x01FED, 10),
    (0x01FF2, 0x01FF5, 10),
    (0x01FF6, 0x01FFD, 10),
    (0x02000, 0x02007, 18),
    (0x02008, 0x0200B, 18),
    (0x0200C, 0x0200D, 4),
    (0x0200D, 0x0200E, 5),
    (0x0200E, 0x02010, 7),
    (0x02018, 0x0201A, 13),
    (0x02024, 0x02025, 13),
    (0x02027, 0x02028, 14),
    (0x02028, 0x0202A, 3),
    (0x0202A, 0x0202F, 7),
    (0x0202F, 0x02030, 17),
    (0x0203F, 0x02041, 17),
    (0x02044, 0x02045, 15),
    (0x02054, 0x02055, 17),
    (0x0205F, 0x02060, 18),
    (0x02060, 0x02065, 7),
    (0x02066, 0x02070, 7),
    (0x02071, 0x02072, 10),
    (0x0207F, 0x02080, 10),
    (0x02090, 0x0209D, 10),
    (0x020D0, 0x020F1, 4),
    (0x02102, 0x02103, 10),
    (0x02107, 0x02108, 10),
    (0x0210A, 0x02114, 10),
    (0x02115, 0x02116, 10),
    (0x02119, 0x0211E, 10),
    (0x02124, 0x02125, 10),
    (0x02126, 0x02127, 10),
    (0x02128, 0x02129, 10),
    (0x0212A, 0x0212E, 10),
    (0x0212F, 0x0213A, 10),
    (0x0213C, 0x02140, 10),
    (0x02145, 0x0214A, 10),
    (0x0214E, 0x0214F, 10),
    (0x02160, 0x02189, 10),
    (0x024B6, 0x024EA, 10),
    (0x02C00, 0x02CE5, 10),
    (0x02CEB, 0x02CEF, 10),
    (0x02CEF, 0x02CF2, 4),
    (0x02CF2, 0x02CF4, 10),
    (0x02D00, 0x02D26, 10),
    (0x02D27, 0x02D28, 10),
    (0x02D2D, 0x02D2E, 10),
    (0x02D30, 0x02D68, 10),
    (0x02D6F, 0x02D70, 10),
    (0x02D7F, 0x02D80, 4),
    (0x02D80, 0x02D97, 10),
    (0x02DA0, 0x02DA7, 10),
    (0x02DA8, 0x02DAF, 10),
    (0x02DB0, 0x02DB7, 10),
    (0x02DB8, 0x02DBF, 10),
    (0x02DC0, 0x02DC7, 10),
    (0x02DC8, 0x02DCF, 10),
    (0x02DD0, 0x02DD7, 10),
    (0x02DD8, 0x02DDF, 10),
    (0x02DE0, 0x02E00, 4),
    (0x02E2F, 0x02E30, 10),
    (0x03000, 0x03001, 18),
    (0x03005, 0x03006, 10),
    (0x0302A, 0x03030, 4),
    (0x03031, 0x03036, 8),
    (0x0303B, 0x0303D, 10),
    (0x03099, 0x0309B, 4),
    (0x0309B, 0x0309D, 8),
    (0x030A0, 0x030FB, 8),
    (0x030FC, 0x03100, 8),
    (0x03105, 0x03130, 10),
    (0x03131, 0x0318F, 10),
    (0x031A0, 0x031C0, 10),
    (0x031F0, 0x03200, 8),
    (0x032D0, 0x032FF, 8),
    (0x03300, 0x03358, 8),
    (0x0A000, 0x0A48D, 10),
    (0x0A4D0, 0x0A4FE, 10),
    (0x0A500, 0x0A60D, 10),
    (0x0A610, 0x0A620, 10),
    (0x0A620, 0x0A62A, 16),
    (0x0A62A, 0x0A62C, 10),
    (0x0A640, 0x0A66F, 10),
    (0x0A66F, 0x0A673, 4),
    (0x0A674, 0x0A67E, 4),
    (0x0A67F, 0x0A69E, 10),
    (0x0A69E, 0x0A6A0, 4),
    (0x0A6A0, 0x0A6F0, 10),
    (0x0A6F0, 0x0A6F2, 4),
    (0x0A708, 0x0A7DD, 10),
    (0x0A7F1, 0x0A802, 10),
    (0x0A802, 0x0A803, 4),
    (0x0A803, 0x0A806, 10),
    (0x0A806, 0x0A807, 4),
    (0x0A807, 0x0A80B, 10),
    (0x0A80B, 0x0A80C, 4),
    (0x0A80C, 0x0A823, 10),
    (0x0A823, 0x0A828, 4),
    (0x0A82C, 0x0A82D, 4),
    (0x0A840, 0x0A874, 10),
    (0x0A880, 0x0A882, 4),
    (0x0A882, 0x0A8B4, 10),
    (0x0A8B4, 0x0A8C6, 4),
    (0x0A8D0, 0x0A8DA, 16),
    (0x0A8E0, 0x0A8F2, 4),
    (0x0A8F2, 0x0A8F8, 10),
    (0x0A8FB, 0x0A8FC, 10),
    (0x0A8FD, 0x0A8FF, 10),
    (0x0A8FF, 0x0A900, 4),
    (0x0A900, 0x0A90A, 16),
    (0x0A90A, 0x0A926, 10),
    (0x0A926, 0x0A92E, 4),
    (0x0A930, 0x0A947, 10),
    (0x0A947, 0x0A954, 4),
    (0x0A960, 0x0A97D, 10),
    (0x0A980, 0x0A984, 4),
    (0x0A984, 0x0A9B3, 10),
    (0x0A9B3, 0x0A9C1, 4),
    (0x0A9CF, 0x0A9D0, 10),
    (0x0A9D0, 0x0A9DA, 16),
    (0x0A9E5, 0x0A9E6, 4),
    (0x0A9F0, 0x0A9FA, 16),
    (0x0AA00, 0x0AA29, 10),
    (0x0AA29, 0x0AA37, 4),
    (0x0AA40, 0x0AA43, 10),
    (0x0AA43, 0x0AA44, 4),
    (0x0AA44, 0x0AA4C, 10),
    (0x0AA4C, 0x0AA4E, 4),
    (0x0AA50, 0x0AA5A, 16),
    (0x0AA7B, 0x0AA7E, 4),
    (0x0AAB0, 0x0AAB1, 4),
    (0x0AAB2, 0x0AAB5, 4),
    (0x0AAB7, 0x0AAB9, 4),
    (0x0AABE, 0x0AAC0, 4),
    (0x0AAC1, 0x0AAC2, 4),
    (0x0AAE0, 0x0AAEB, 10),
    (0x0AAEB, 0x0AAF0, 4),
    (0x0AAF2, 0x0AAF5, 10),
    (0x0AAF5, 0x0AAF7, 4),
    (0x0AB01, 0x0AB07, 10),
    (0x0AB09, 0x0AB0F, 10),
    (0x0AB11, 0x0AB17, 10),
    (0x0AB20, 0x0AB27, 10),
    (0x0AB28, 0x0AB2F, 10),
    (0x0AB30, 0x0AB6A, 10),
    (0x0AB70, 0x0ABE3, 10),
    (0x0ABE3, 0x0ABEB, 4),
    (0x0ABEC, 0x0ABEE, 4),
    (0x0ABF0, 0x0ABFA, 16),
    (0x0AC00, 0x0D7A4, 10),
    (0x0D7B0, 0x0D7C7, 10),
    (0x0D7CB, 0x0D7FC, 10),
    (0x0FB00, 0x0FB07, 10),
    (0x0FB13, 0x0FB18, 10),
    (0x0FB1D, 0x0FB1E, 9),
    (0x0FB1E, 0x0FB1F, 4),
    (0x0FB1F, 0x0FB29, 9),
    (0x0FB2A, 0x0FB37, 9),
    (0x0FB38, 0x0FB3D, 9),
    (0x0FB3E, 0x0FB3F, 9),
    (0x0FB40, 0x0FB42, 9),
    (0x0FB43, 0x0FB45, 9),
    (0x0FB46, 0x0FB50, 9),
    (0x0FB50, 0x0FBB2, 10),
    (0x0FBD3, 0x0FD3E, 10),
    (0x0FD50, 0x0FD90, 10),
    (0x0FD92, 0x0FDC8, 10),
    (0x0FDF0, 0x0FDFC, 10),
    (0x0FE00, 0x0FE10, 4),
    (0x0FE13, 0x0FE14, 14),
    (0x0FE20, 0x0FE30, 4),
    (0x0FE33, 0x0FE35, 17),
    (0x0FE4D, 0x0FE50, 17),
    (0x0FE50, 0x0FE51, 15),
    (0x0FE52, 0x0FE53, 13),
    (0x0FE54, 0x0FE55, 15),
    (0x0FE55, 0x0FE56, 14),
    (0x0FE70, 0x0FE75, 10),
    (0x0FE76, 0x0FEFD, 10),
    (0x0FEFF, 0x0FF00, 7),
    (0x0FF07, 0x0FF08, 13),
    (0x0FF0C, 0x0FF0D, 15),
    (0x0FF0E, 0x0FF0F, 13),
    (0x0FF10, 0x0FF1A, 16),
    (0x0FF1A, 0x0FF1B, 14),
    (0x0FF1B, 0x0FF1C, 15),
    (0x0FF21, 0x0FF3B, 10),
    (0x0FF3F, 0x0FF40, 17),
    (0x0FF41, 0x0FF5B, 10),
    (0x0FF66, 0x0FF9E, 8),
    (0x0FF9E, 0x0FFA0, 4),
    (0x0FFA0, 0x0FFBF, 10),
    (0x0FFC2, 0x0FFC8, 10),
    (0x0FFCA, 0x0FFD0, 10),
    (0x0FFD2, 0x0FFD8, 10),
    (0x0FFDA, 0x0FFDD, 10),
    (0x0FFF9, 0x0FFFC, 7),
    (0x10000, 0x1000C, 10),
    (0x1000D, 0x10027, 10),
    (0x10028, 0x1003B, 10),
    (0x1003C, 0x1003E, 10),
    (0x1003F, 0x1004E, 10),
    (0x10050, 0x1005E, 10),
    (0x10080, 0x100FB, 10),
    (0x10140, 0x10175, 10),
    (0x101FD, 0x101FE, 4),
    (0x10280, 0x1029D, 10),
    (0x102A0, 0x102D1, 10),
    (0x102E0, 0x102E1, 4),
    (0x10300, 0x10320, 10),
    (0x1032D, 0x1034B, 10),
    (0x10350, 0x10376, 10),
    (0x10376, 0x1037B, 4),
    (0x10380, 0x1039E, 10),
    (0x103A0, 0x103C4, 10),
    (0x103C8, 0x103D0, 10),
    (0x103D1, 0x103D6, 10),
    (0x10400, 0x1049E, 10),
    (0x104A0, 0x104AA, 16),
    (0x104B0, 0x104D4, 10),
    (0x104D8, 0x104FC, 10),
    (0x10500, 0x10528, 10),
    (0x10530, 0x10564, 10),
    (0x10570, 0x1057B, 10),
    (0x1057C, 0x1058B, 10),
    (0x1058C, 0x10593, 10),
    (0x10594, 0x10596, 10),
    (0x10597, 0x105A2, 10),
    (0x105A3, 0x105B2, 10),
    (0x105B3, 0x105BA, 10),
    (0x105BB, 0x105BD, 10),
    (0x105C0, 0x105F4, 10),
    (0x10600, 0x10737, 10),
    (0x10740, 0x10756, 10),
    (0x10760, 0x10768, 10),
    (0x10780, 0x10786, 10),
    (0x10787, 0x107B1, 10),
    (0x107B2, 0x107BB, 10),
    (0x10800, 0x10806, 10),
    (0x10808, 0x10809, 10),
    (0x1080A, 0x10836, 10),
    (0x10837, 0x10839, 10),
    (0x1083C, 0x1083D, 10),
    (0x1083F, 0x10856, 10),
    (0x10860, 0x10877, 10),
    (0x10880, 0x1089F, 10),
    (0x108E0, 0x108F3, 10),
    (0x108F4, 0x108F6, 10),
    (0x10900, 0x10916, 10),
    (0x10920, 0x1093A, 10),
    (0x10940, 0x1095A, 10),
    (0x10980, 0x109B8, 10),
    (0x109BE, 0x109C0, 10),
    (0x10A00, 0x10A01, 10),
    (0x10A01, 0x10A04, 4),
    (0x10A05, 0x10A07, 4),
    (0x10A0C, 0x10A10, 4),
    (0x10A10, 0x10A14, 10),
    (0x10A15, 0x10A18, 10),
    (0x10A19, 0x10A36, 10),
    (0x10A38, 0x10A3B, 4),
    (0x10A3F, 0x10A40, 4),
    (0x10A60, 0x10A7D, 10),
    (0x10A80, 0x10A9D, 10),
    (0x10AC0, 0x10AC8, 10),
    (0x10AC9, 0x10AE5, 10),
    (0x10AE5, 0x10AE7, 4),
    (0x10B00, 0x10B36, 10),
    (0x10B40, 0x10B56, 10),
    (0x10B60, 0x10B73, 10),
    (0x10B80, 0x10B92, 10),
    (0x10C00, 0x10C49, 10),
    (0x10C80, 0x10CB3, 10),
    (0x10CC0, 0x10CF3, 10),
    (0x10D00, 0x10D24, 10),
    (0x10D24, 0x10D28, 4),
    (0x10D30, 0x10D3A, 16),
    (0x10D40, 0x10D4A, 16),
    (0x10D4A, 0x10D66, 10),
    (0x10D69, 0x10D6E, 4),
    (0x10D6F, 0x10D86, 10),
    (0x10E80, 0x10EAA, 10),
    (0x10EAB, 0x10EAD, 4),
    (0x10EB0, 0x10EB2, 10),
    (0x10EC2, 0x10EC8, 10),
    (0x10EFA, 0x10F00, 4),
    (0x10F00, 0x10F1D, 10),
    (0x10F27, 0x10F28, 10),
    (0x10F30, 0x10F46, 10),
    (0x10F46, 0x10F51, 4),
    (0x10F70, 0x10F82, 10),
    (0x10F82, 0x10F86, 4),
    (0x10FB0, 0x10FC5, 10),
    (0x10FE0, 0x10FF7, 10),
    (0x11000, 0x11003, 4),
    (0x11003, 0x11038, 10),
    (0x11038, 0x11047, 4),
    (0x11066, 0x11070, 16),
    (0x11070, 0x11071, 4),
    (0x11071, 0x11073, 10),
    (0x11073, 0x11075, 4),
    (0x11075, 0x11076, 10),
    (0x1107F, 0x11083, 4),
    (0x11083, 0x110B0, 10),
    (0x110B0, 0x110BB, 4),
    (0x110BD, 0x110BE, 16),
    (0x110C2, 0x110C3, 4),
    (0x110CD, 0x110CE, 16),
    (0x110D0, 0x110E9, 10),
    (0x110F0, 0x110FA, 16),
    (0x11100, 0x11103, 4),
    (0x11103, 0x11127, 10),
    (0x11127, 0x11135, 4),
    (0x11136, 0x11140, 16),
    (0x11144, 0x11145, 10),
    (0x11145, 0x11147, 4),
    (0x11147, 0x11148, 10),
    (0x11150, 0x11173, 10),
    (0x11173, 0x11174, 4),
    (0x11176, 0x11177, 10),
    (0x11180, 0x11183, 4),
    (0x11183, 0x111B3, 10),
    (0x111B3, 0x111C1, 4),
    (0x111C1, 0x111C5, 10),
    (0x111C9, 0x111CD, 4),
    (0x111CE, 0x111D0, 4),
    (0x111D0, 0x111DA, 16),
    (0x111DA, 0x111DB, 10),
    (0x111DC, 0x111DD, 10),
    (0x11200, 0x11212, 10),
    (0x11213, 0x1122C, 10),
    (0x1122C, 0x11238, 4),
    (0x1123E, 0x1123F, 4),
    (0x1123F, 0x11241, 10),
    (0x11241, 0x11242, 4),
    (0x11280, 0x11287, 10),
    (0x11288, 0x11289, 10),
    (0x1128A, 0x1128E, 10),
    (0x1128F, 0x1129E, 10),
    (0x1129F, 0x112A9, 10),
    (0x112B0, 0x112DF, 10),
    (0x112DF, 0x112EB, 4),
    (0x112F0, 0x112FA, 16),
    (0x11300, 0x11304, 4),
    (0x11305, 0x1130D, 10),
    (0x1130F, 0x11311, 10),
    (0x11313, 0x11329, 10),
    (0x1132A, 0x11331, 10),
    (0x11332, 0x11334, 10),
    (0x11335, 0x1133A, 10),
    (0x1133B, 0x1133D, 4),
    (0x1133D, 0x1133E, 10),
    (0x1133E, 0x11345, 4),
    (0x11347, 0x11349, 4),
    (0x1134B, 0x1134E, 4),
    (0x11350, 0x11351, 10),
    (0x11357, 0x11358, 4),
    (0x1135D, 0x11362, 10),
    (0x11362, 0x11364, 4),
    (0x11366, 0x1136D, 4),
    (0x11370, 0x11375, 4),
    (0x11380, 0x1138A, 10),
    (0x1138B, 0x1138C, 10),
    (0x1138E, 0x1138F, 10),
    (0x11390, 0x113B6, 10),
    (0x113B7, 0x113B8, 10),
    (0x113B8, 0x113C1, 4),
    (0x113C2, 0x113C3, 4),
    (0x113C5, 0x113C6, 4),
    (0x113C7, 0x113CB, 4),
    (0x113CC, 0x113D1, 4),
    (0x113D1, 0x113D2, 10),
    (0x113D2, 0x113D3, 4),
    (0x113D3, 0x113D4, 10),
    (0x113E1, 0x113E3, 4),
    (0x11400, 0x11435, 10),
    (0x11435, 0x11447, 4),
    (0x11447, 0x1144B, 10),
    (0x11450, 0x1145A, 16),
    (0x1145E, 0x1145F, 4),
    (0x1145F, 0x11462, 10),
    (0x11480, 0x114B0, 10),
    (0x114B0, 0x114C4, 4),
    (0x114C4, 0x114C6, 10),
    (0x114C7, 0x114C8, 10),
    (0x114D0, 0x114DA, 16),
    (0x11580, 0x115AF, 10),
    (0x115AF, 0x115B6, 4),
    (0x115B8, 0x115C1, 4),
    (0x115D8, 0x115DC, 10),
    (0x115DC, 0x115DE, 4),
    (0x11600, 0x11630, 10),
    (0x11630, 0x11641, 4),
    (0x11644, 0x11645, 10),
    (0x11650, 0x1165A, 16),
    (0x11680, 0x116AB, 10),
    (0x116AB, 0x116B8, 4),
    (0x116B8, 0x116B9, 10),
    (0x116C0, 0x116CA, 16),
    (0x116D0, 0x116E4, 16),
    (0x1171D, 0x1172C, 4),
    (0x11730, 0x1173A, 16),
    (0x11800, 0x1182C, 10),
    (0x1182C, 0x1183B, 4),
    (0x118A0, 0x118E0, 10),
    (0x118E0, 0x118EA, 16),
    (0x118FF, 0x11907, 10),
    (0x11909, 0x1190A, 10),
    (0x1190C, 0x11914, 10),
    (0x11915, 0x11917, 10),
    (0x11918, 0x11930, 10),
    (0x11930, 0x11936, 4),
    (0x11937, 0x11939, 4),
    (0x1193B, 0x1193F, 4),
    (0x1193F, 0x11940, 10),
    (0x11940, 0x11941, 4),
    (0x11941, 0x11942, 10),
    (0x11942, 0x11944, 4),
    (0x11950, 0x1195A, 16),
    (0x119A0, 0x119A8, 10),
    (0x119AA, 0x119D1, 10),
    (0x119D1, 0x119D8, 4),
    (0x119DA, 0x119E1, 4),
    (0x119E1, 0x119E2, 10),
    (0x119E3, 0x119E4, 10),
    (0x119E4, 0x119E5, 4),
    (0x11A00, 0x11A01, 10),
    (0x11A01, 0x11A0B, 4),
    (0x11A0B, 0x11A33, 10),
    (0x11A33, 0x11A3A, 4),
    (0x11A3A, 0x11A3B, 10),
    (0x11A3B, 0x11A3F, 4),
    (0x11A47, 0x11A48, 4),
    (0x11A50, 0x11A51, 10),
    (0x11A51, 0x11A5C, 4),
    (0x11A5C, 0x11A8A, 10),
    (0x11A8A, 0x11A9A, 4),
    (0x11A9D, 0x11A9E, 10),
    (0x11AB0, 0x11AF9, 10),
    (0x11B60, 0x11B68, 4),
    (0x11BC0, 0x11BE1, 10),
    (0x11BF0, 0x11BFA, 16),
    (0x11C00, 0x11C09, 10),
    (0x11C0A, 0x11C2F, 10),
    (0x11C2F, 0x11C37, 4),
    (0x11C38, 0x11C40, 4),
    (0x11C40, 0x11C41, 10),
    (0x11C50, 0x11C5A, 16),
    (0x11C72, 0x11C90, 10),
    (0x11C92, 0x11CA8, 4),
    (0x11CA9, 0x11CB7, 4),
    (0x11D00, 0x11D07, 10),
    (0x11D08, 0x11D0A, 10),
    (0x11D0B, 0x11D31, 10),
    (0x11D31, 0x11D37, 4),
    (0x11D3A, 0x11D3B, 4),
    (0x11D3C, 0x11D3E, 4),
    (0x11D3F, 0x11D46, 4),
    (0x11D46, 0x11D47, 10),
    (0x11D47, 0x11D48, 4),
    (0x11D50, 0x11D5A, 16),
    (0x11D60, 0x11D66, 10),
    (0x11D67, 0x11D69, 10),
    (0x11D6A, 0x11D8A, 10),
    (0x11D8A, 0x11D8F, 4),
    (0x11D90, 0x11D92, 4),
    (0x11D93, 0x11D98, 4),
    (0x11D98, 0x11D99, 10),
    (0x11DA0, 0x11DAA, 16),
    (0x11DB0, 0x11DDC, 10),
    (0x11DE0, 0x11DEA, 16),
    (0x11EE0, 0x11EF3, 10),
    (0x11EF3, 0x11EF7, 4),
    (0x11F00, 0x11F02, 4),
    (0x11F02, 0x11F03, 10),
    (0x11F03, 0x11F04, 4),
    (0x11F04, 0x11F11, 10),
    (0x11F12, 0x11F34, 10),
    (0x11F34, 0x11F3B, 4),
    (0x11F3E, 0x11F43, 4),
    (0x11F50, 0x11F5A, 16),
    (0x11F5A, 0x11F5B, 4),
    (0x11FB0, 0x11FB1, 10),
    (0x12000, 0x1239A, 10),
    (0x12400, 0x1246F, 10),
    (0x12480, 0x12544, 10),
    (0x12F90, 0x12FF1, 10),
    (0x13000, 0x13430, 10),
    (0x13430, 0x13440, 7),
    (0x13440, 0x13441, 4),
    (0x13441, 0x13447, 10),
    (0x13447, 0x13456, 4),
    (0x13460, 0x143FB, 10),
    (0x14400, 0x14647, 10),
    (0x16100, 0x1611E, 10),
    (0x1611E, 0x16130, 4),
    (0x16130, 0x1613A, 16),
    (0x16800, 0x16A39, 10),
    (0x16A40, 0x16A5F, 10),
    (0x16A60, 0x16A6A, 16),
    (0x16A70, 0x16ABF, 10),
    (0x16AC0, 0x16ACA, 16),
    (0x16AD0, 0x16AEE, 10),
    (0x16AF0, 0x16AF5, 4),
    (0x16B00, 0x16B30, 10),
    (0x16B30, 0x16B37, 4),
    (0x16B40, 0x16B44, 10),
    (0x16B50, 0x16B5A, 16),
    (0x16B63, 0x16B78, 10),
    (0x16B7D, 0x16B90, 10),
    (0x16D40, 0x16D6D, 10),
    (0x16D70, 0x16D7A, 16),
    (0x16E40, 0x16E80, 10),
    (0x16EA0, 0x16EB9, 10),
    (0x16EBB, 0x16ED4, 10),
    (0x16F00, 0x16F4B, 10),
    (0x16F4F, 0x16F50, 4),
    (0x16F50, 0x16F51, 10),
    (0x16F51, 0x16F88, 4),
    (0x16F8F, 0x16F93, 4),
    (0x16F93, 0x16FA0, 10),
    (0x16FE0, 0x16FE2, 10),
    (0x16FE3, 0x16FE4, 10),
    (0x16FE4, 0x16FE5, 4),
    (0x16FF0, 0x16FF2, 4),
    (0x1AFF0, 0x1AFF4, 8),
    (0x1AFF5, 0x1AFFC, 8),
    (0x1AFFD, 0x1AFFF, 8),
    (0x1B000, 0x1B001, 8),
    (0x1B120, 0x1B123, 8),
    (0x1B155, 0x1B156, 8),
    (0x1B164, 0x1B168, 8),
    (0x1BC00, 0x1BC6B, 10),
    (0x1BC70, 0x1BC7D, 10),
    (0x1BC80, 0x1BC89, 10),
    (0x1BC90, 0x1BC9A, 10),
    (0x1BC9D, 0x1BC9F, 4),
    (0x1BCA0, 0x1BCA4, 7),
    (0x1CCF0, 0x1CCFA, 16),
    (0x1CF00, 0x1CF2E, 4),
    (0x1CF30, 0x1CF47, 4),
    (0x1D165, 0x1D16A, 4),
    (0x1D16D, 0x1D173, 4),
    (0x1D173, 0x1D17B, 7),
    (0x1D17B, 0x1D183, 4),
    (0x1D185, 0x1D18C, 4),
    (0x1D1AA, 0x1D1AE, 4),
    (0x1D242, 0x1D245, 4),
    (0x1D400, 0x1D455, 10),
    (0x1D456, 0x1D49D, 10),
    (0x1D49E, 0x1D4A0, 10),
    (0x1D4A2, 0x1D4A3, 10),
    (0x1D4A5, 0x1D4A7, 10),
    (0x1D4A9, 0x1D4AD, 10),
    (0x1D4AE, 0x1D4BA, 10),
    (0x1D4BB, 0x1D4BC, 10),
    (0x1D4BD, 0x1D4C4, 10),
    (0x1D4C5, 0x1D506, 10),
    (0x1D507, 0x1D50B, 10),
    (0x1D50D, 0x1D515, 10),
    (0x1D516, 0x1D51D, 10),
    (0x1D51E, 0x1D53A, 10),
    (0x1D53B, 0x1D53F, 10),
    (0x1D540, 0x1D545, 10),
    (0x1D546, 0x1D547, 10),
    (0x1D54A, 0x1D551, 10),
    (0x1D552, 0x1D6A6, 10),
    (0x1D6A8, 0x1D6C1, 10),
    (0x1D6C2, 0x1D6DB, 10),
    (0x1D6DC, 0x1D6FB, 10),
    (0x1D6FC, 0x1D715, 10),
    (0x1D716, 0x1D735, 10),
    (0x1D736, 0x1D74F, 10),
    (0x1D750, 0x1D76F, 10),
    (0x1D770, 0x1D789, 10),
    (0x1D78A, 0x1D7A9, 10),
    (0x1D7AA, 0x1D7C3, 10),
    (0x1D7C4, 0x1D7CC, 10),
    (0x1D7CE, 0x1D800, 16),
    (0x1DA00, 0x1DA37, 4),
    (0x1DA3B, 0x1DA6D, 4),
    (0x1DA75, 0x1DA76, 4),
    (0x1DA84, 0x1DA85, 4),
    (0x1DA9B, 0x1DAA0, 4),
    (0x1DAA1, 0x1DAB0, 4),
    (0x1DF00, 0x1DF1F, 10),
    (0x1DF25, 0x1DF2B, 10),
    (0x1E000, 0x1E007, 4),
    (0x1E008, 0x1E019, 4),
    (0x1E01B, 0x1E022, 4),
    (0x1E023, 0x1E025, 4),
    (0x1E026, 0x1E02B, 4),
    (0x1E030, 0x1E06E, 10),
    (0x1E08F, 0x1E090, 4),
    (0x1E100, 0x1E12D, 10),
    (0x1E130, 0x1E137, 4),
    (0x1E137, 0x1E13E, 10),
    (0x1E140, 0x1E14A, 16),
    (0x1E14E, 0x1E14F, 10),
    (0x1E290, 0x1E2AE, 10),
    (0x1E2AE, 0x1E2AF, 4),
    (0x1E2C0, 0x1E2EC, 10),
    (0x1E2EC, 0x1E2F0, 4),
    (0x1E2F0, 0x1E2FA, 16),
    (0x1E4D0, 0x1E4EC, 10),
    (0x1E4EC, 0x1E4F0, 4),
    (0x1E4F0, 0x1E4FA, 16),
    (0x1E5D0, 0x1E5EE, 10),
    (0x1E5EE, 0x1E5F0, 4),
    (0x1E5F0, 0x1E5F1, 10),
    (0x1E5F1, 0x1E5FB, 16),
    (0x1E6C0, 0x1E6DF, 10),
    (0x1E6E0, 0x1E6E3, 10),
    (0x1E6E3, 0x1E6E4, 4),
    (0x1E6E4, 0x1E6E6, 10),
    (0x1E6E6, 0x1E6E7, 4),
    (0x1E6E7, 0x1E6EE, 10),
    (0x1E6EE, 0x1E6F0, 4),
    (0x1E6F0, 0x1E6F5, 10),
    (0x1E6F5, 0x1E6F6, 4),
    (0x1E6FE, 0x1E700, 10),
    (0x1E7E0, 0x1E7E7, 10),
    (0x1E7E8, 0x1E7EC, 10),
    (0x1E7ED, 0x1E7EF, 10),
    (0x1E7F0, 0x1E7FF, 10),
    (0x1E800, 0x1E8C5, 10),
    (0x1E8D0, 0x1E8D7, 4),
    (0x1E900, 0x1E944, 10),
    (0x1E944, 0x1E94B, 4),
    (0x1E94B, 0x1E94C, 10),
    (0x1E950, 0x1E95A, 16),
    (0x1EE00, 0x1EE04, 10),
    (0x1EE05, 0x1EE20, 10),
    (0x1EE21, 0x1EE23, 10),
    (0x1EE24, 0x1EE25, 10),
    (0x1EE27, 0x1EE28, 10),
    (0x1EE29, 0x1EE33, 10),
    (0x1EE34, 0x1EE38, 10),
    (0x1EE39, 0x1EE3A, 10),
    (0x1EE3B, 0x1EE3C, 10),
    (0x1EE42, 0x1EE43, 10),
    (0x1EE47, 0x1EE48, 10),
    (0x1EE49, 0x1EE4A, 10),
    (0x1EE4B, 0x1EE4C, 10),
    (0x1EE4D, 0x1EE50, 10),
    (0x1EE51, 0x1EE53, 10),
    (0x1EE54, 0x1EE55, 10),
    (0x1EE57, 0x1EE58, 10),
    (0x1EE59, 0x1EE5A, 10),
    (0x1EE5B, 0x1EE5C, 10),
    (0x1EE5D, 0x1EE5E, 10),
    (0x1EE5F, 0x1EE60, 10),
    (0x1EE61, 0x1EE63, 10),
    (0x1EE64, 0x1EE65, 10),
    (0x1EE67, 0x1EE6B, 10),
    (0x1EE6C, 0x1EE73, 10),
    (0x1EE74, 0x1EE78, 10),
    (0x1EE79, 0x1EE7D, 10),
    (0x1EE7E, 0x1EE7F, 10),
    (0x1EE80, 0x1EE8A, 10),
    (0x1EE8B, 0x1EE9C, 10),
    (0x1EEA1, 0x1EEA4, 10),
    (0x1EEA5, 0x1EEAA, 10),
    (0x1EEAB, 0x1EEBC, 10),
    (0x1F130, 0x1F14A, 10),
    (0x1F150, 0x1F16A, 10),
    (0x1F170, 0x1F18A, 10),
    (0x1F1E6, 0x1F200, 6),
    (0x1F3FB, 0x1F400, 4),
    (0x1FBF0, 0x1FBFA, 16),
    (0xE0001, 0xE0002, 7),
    (0xE0020, 0xE0080, 4),
    (0xE0100, 0xE01F0, 4),
]

EXT_PICT_RANGES = [
    (0x000A9, 0x000AA),
    (0x000AE, 0x000AF),
    (0x0203C, 0x0203D),
    (0x02049, 0x0204A),
    (0x02122, 0x02123),
    (0x02139, 0x0213A),
    (0x02194, 0x0219A),
    (0x021A9, 0x021AB),
    (0x0231A, 0x0231C),
    (0x02328, 0x02329),
    (0x023CF, 0x023D0),
    (0x023E9, 0x023F4),
    (0x023F8, 0x023FB),
    (0x024C2, 0x024C3),
    (0x025AA, 0x025AC),
    (0x025B6, 0x025B7),
    (0x025C0, 0x025C1),
    (0x025FB, 0x025FF),
    (0x02600, 0x02605),
    (0x0260E, 0x0260F),
    (0x02611, 0x02612),
    (0x02614, 0x02616),
    (0x02618, 0x02619),
    (0x0261D, 0x0261E),
    (0x02620, 0x02621),
    (0x02622, 0x02624),
    (0x02626, 0x02627),
    (0x0262A, 0x0262B),
    (0x0262E, 0x02630),
    (0x02638, 0x0263B),
    (0x02640, 0x02641),
    (0x02642, 0x02643),
    (0x02648, 0x02654),
    (0x0265F, 0x02661),
    (0x02663, 0x02664),
    (0x02665, 0x02667),
    (0x02668, 0x02669),
    (0x0267B, 0x0267C),
    (0x0267E, 0x02680),
    (0x02692, 0x02698),
    (0x02699, 0x0269A),
    (0x0269B, 0x0269D),
    (0x026A0, 0x026A2),
    (0x026A7, 0x026A8),
    (0x026AA, 0x026AC),
    (0x026B0, 0x026B2),
    (0x026BD, 0x026BF),
    (0x026C4, 0x026C6),
    (0x026C8, 0x026C9),
    (0x026CE, 0x026D0),
    (0x026D1, 0x026D2),
    (0x026D3, 0x026D5),
    (0x026E9, 0x026EB),
    (0x026F0, 0x026F6),
    (0x026F7, 0x026FB),
    (0x026FD, 0x026FE),
    (0x02702, 0x02703),
    (0x02705, 0x02706),
    (0x02708, 0x0270E),
    (0x0270F, 0x02710),
    (0x02712, 0x02713),
    (0x02714, 0x02715),
    (0x02716, 0x02717),
    (0x0271D, 0x0271E),
    (0x02721, 0x02722),
    (0x02728, 0x02729),
    (0x02733, 0x02735),
    (0x02744, 0x02745),
    (0x02747, 0x02748),
    (0x0274C, 0x0274D),
    (0x0274E, 0x0274F),
    (0x02753, 0x02756),
    (0x02757, 0x02758),
    (0x02763, 0x02765),
    (0x02795, 0x02798),
    (0x027A1, 0x027A2),
    (0x027B0, 0x027B1),
    (0x027BF, 0x027C0),
    (0x02934, 0x02936),
    (0x02B05, 0x02B08),
    (0x02B1B, 0x02B1D),
    (0x02B50, 0x02B51),
    (0x02B55, 0x02B56),
    (0x03030, 0x03031),
    (0x0303D, 0x0303E),
    (0x03297, 0x03298),
    (0x03299, 0x0329A),
    (0x1F004, 0x1F005),
    (0x1F02C, 0x1F030),
    (0x1F094, 0x1F0A0),
    (0x1F0AF, 0x1F0B1),
    (0x1F0C0, 0x1F0C1),
    (0x1F0CF, 0x1F0D1),
    (0x1F0F6, 0x1F100),
    (0x1F170, 0x1F172),
    (0x1F17E, 0x1F180),
    (0x1F18E, 0x1F18F),
    (0x1F191, 0x1F19B),
    (0x1F1AE, 0x1F1E6),
    (0x1F201, 0x1F210),
    (0x1F21A, 0x1F21B),
    (0x1F22F, 0x1F230),
    (0x1F232, 0x1F23B),
    (0x1F23C, 0x1F240),
    (0x1F249, 0x1F260),
    (0x1F266, 0x1F322),
    (0x1F324, 0x1F394),
    (0x1F396, 0x1F398),
    (0x1F399, 0x1F39C),
    (0x1F39E, 0x1F3F1),
    (0x1F3F3, 0x1F3F6),
    (0x1F3F7, 0x1F3FB),
    (0x1F400, 0x1F4FE),
    (0x1F4FF, 0x1F53E),
    (0x1F549, 0x1F54F),
    (0x1F550, 0x1F568),
    (0x1F56F, 0x1F571),
    (0x1F573, 0x1F57B),
    (0x1F587, 0x1F588),
    (0x1F58A, 0x1F58E),
    (0x1F590, 0x1F591),
    (0x1F595, 0x1F597),
    (0x1F5A4, 0x1F5A6),
    (0x1F5A8, 0x1F5A9),
    (0x1F5B1, 0x1F5B3),
    (0x1F5BC, 0x1F5BD),
    (0x1F5C2, 0x1F5C5),
    (0x1F5D1, 0x1F5D4),
    (0x1F5DC, 0x1F5DF),
    (0x1F5E1, 0x1F5E2),
    (0x1F5E3, 0x1F5E4),
    (0x1F5E8, 0x1F5E9),
    (0x1F5EF, 0x1F5F0),
    (0x1F5F3, 0x1F5F4),
    (0x1F5FA, 0x1F650),
    (0x1F680, 0x1F6C6),
    (0x1F6CB, 0x1F6D3),
    (0x1F6D5, 0x1F6E6),
    (0x1F6E9, 0x1F6EA),
    (0x1F6EB, 0x1F6F1),
    (0x1F6F3, 0x1F700),
    (0x1F7DA, 0x1F800),
    (0x1F80C, 0x1F810),
    (0x1F848, 0x1F850),
    (0x1F85A, 0x1F860),
    (0x1F888, 0x1F890),
    (0x1F8AE, 0x1F8B0),
    (0x1F8BC, 0x1F8C0),
    (0x1F8C2, 0x1F8D0),
    (0x1F8D9, 0x1F900),
    (0x1F90C, 0x1F93B),
    (0x1F93C, 0x1F946),
    (0x1F947, 0x1FA00),
    (0x1FA58, 0x1FA60),
    (0x1FA6E, 0x1FB00),
    (0x1FC00, 0x1FFFE),
]
