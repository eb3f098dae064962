"""
源代码包初始化
"""
__version__ = "1.0.0"
__description__ = "有限逆半群与泛群胚的计算与同构定理校验"
